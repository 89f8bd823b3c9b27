#include "kbp/young.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace kbp {

using Rational = boost::multiprecision::cpp_rational;

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); i++) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        n_ += parts_[i];
    }
}

Partition Partition::column(int k) {
    return Partition(std::vector<int>(k, 1));
}

std::optional<Partition> Partition::s_inner(int k) {
    if (k < 2) {
        return std::nullopt;
    }
    std::vector<int> parts(k - 1, 1);
    parts[0] = 2;
    return Partition(parts);
}

int Partition::column_length(int j) const {
    int len = 0;
    while (len < rows() && parts_[len] > j) {
        len++;
    }
    return len;
}

bool Partition::contains(const Partition &inner) const {
    if (inner.rows() > rows()) {
        return false;
    }
    for (int i = 0; i < inner.rows(); i++) {
        if (inner.parts_[i] > parts_[i]) {
            return false;
        }
    }
    return true;
}

int Partition::hook(int i, int j) const {
    return (parts_[i] - j - 1) + (column_length(j) - i - 1) + 1;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); i++) {
        if (i) {
            out << ',';
        }
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

Partition Partition::parse(const std::string &text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            parts.push_back(std::stoi(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            token.push_back(c);
        } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
            flush();
        } else {
            throw std::invalid_argument("Partition::parse: unexpected character in '" + text + "'");
        }
    }
    flush();
    return Partition(parts);
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)), positions_(shape_.size()) {
    if (static_cast<int>(rows_.size()) != shape_.rows()) {
        throw std::invalid_argument("Tableau: row count does not match shape");
    }
    for (int i = 0; i < shape_.rows(); i++) {
        if (static_cast<int>(rows_[i].size()) != shape_.row(i)) {
            throw std::invalid_argument("Tableau: row length does not match shape");
        }
        for (int j = 0; j < shape_.row(i); j++) {
            int v = rows_[i][j];
            if (v >= 1 && v <= shape_.size()) {
                positions_[v - 1] = {i, j};
            }
        }
    }
}

Box Tableau::position_of(int v) const {
    return positions_.at(v - 1);
}

std::vector<int> Tableau::column_word() const {
    std::vector<int> word;
    word.reserve(shape_.size());
    for (int j = 0; j < shape_.row(0); j++) {
        for (int i = 0; i < shape_.column_length(j); i++) {
            word.push_back(rows_[i][j]);
        }
    }
    return word;
}

bool Tableau::is_standard() const {
    std::vector<bool> seen(shape_.size() + 1, false);
    for (int i = 0; i < shape_.rows(); i++) {
        for (int j = 0; j < shape_.row(i); j++) {
            int v = rows_[i][j];
            if (v < 1 || v > shape_.size() || seen[v]) {
                return false;
            }
            seen[v] = true;
            if (j > 0 && rows_[i][j - 1] >= v) {
                return false;
            }
            if (i > 0 && rows_[i - 1][j] >= v) {
                return false;
            }
        }
    }
    return true;
}

std::string Tableau::str() const {
    std::ostringstream out;
    for (int i = 0; i < shape_.rows(); i++) {
        if (i) {
            out << '/';
        }
        for (int j = 0; j < shape_.row(i); j++) {
            if (j && shape_.size() > 9) {
                out << ',';
            }
            out << rows_[i][j];
        }
    }
    return out.str();
}

char class_letter(TableauClass c) {
    switch (c) {
        case TableauClass::A:
            return 'A';
        case TableauClass::S:
            return 'S';
        default:
            return 'M';
    }
}

TableauClass classify(const Tableau &t, int k) {
    const Partition &shape = t.shape();
    auto first_column_is_prefix = [&](int len) {
        if (shape.rows() < len) {
            return false;
        }
        for (int i = 0; i < len; i++) {
            if (t.at(i, 0) != i + 1) {
                return false;
            }
        }
        return true;
    };
    if (first_column_is_prefix(k)) {
        return TableauClass::A;
    }
    if (k >= 2 && first_column_is_prefix(k - 1) && shape.row(0) >= 2 && t.at(0, 1) == k) {
        return TableauClass::S;
    }
    return TableauClass::M;
}

namespace {

void partitions_rec(int remaining, int max_part, int rows_left, bool exact, std::vector<int> &cur,
                    std::vector<Partition> &out) {
    if (remaining == 0) {
        if (!exact || rows_left == 0) {
            out.emplace_back(cur);
        }
        return;
    }
    if (rows_left == 0) {
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; p--) {
        // Each remaining row needs at least one box when the row count is exact.
        if (exact && remaining - p < rows_left - 1) {
            continue;
        }
        cur.push_back(p);
        partitions_rec(remaining - p, p, rows_left - 1, exact, cur, out);
        cur.pop_back();
    }
}

void syt_rec(const Partition &shape, int next, std::vector<std::vector<int>> &rows, std::vector<int> &filled,
             std::vector<Tableau> &out) {
    if (next > shape.size()) {
        out.emplace_back(shape, rows);
        return;
    }
    for (int i = 0; i < shape.rows(); i++) {
        int j = filled[i];
        if (j >= shape.row(i)) {
            continue;
        }
        if (i > 0 && filled[i - 1] <= j) {
            continue;
        }
        rows[i][j] = next;
        filled[i]++;
        syt_rec(shape, next + 1, rows, filled, out);
        filled[i]--;
        rows[i][j] = 0;
    }
}

Rational inverse_factorial(int m) {
    if (m < 0) {
        return Rational(0);
    }
    return Rational(BigInt(1), factorial(m));
}

Rational determinant(std::vector<std::vector<Rational>> a) {
    size_t n = a.size();
    Rational det = 1;
    for (size_t c = 0; c < n; c++) {
        size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; r++) {
            if (a[r][c] == 0) {
                continue;
            }
            Rational f = a[r][c] / a[c][c];
            for (size_t j = c; j < n; j++) {
                a[r][j] -= f * a[c][j];
            }
        }
    }
    return det;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int exact_rows) {
    std::vector<Partition> out;
    if (exact_rows < 1 || n < exact_rows) {
        return out;
    }
    std::vector<int> cur;
    partitions_rec(n, n, exact_rows, true, cur, out);
    return out;
}

std::vector<Partition> partitions_at_most(int n, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    partitions_rec(n, n, max_rows, false, cur, out);
    return out;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; i++) {
        f *= i;
    }
    return f;
}

BigInt syt_dim(const Partition &shape) {
    BigInt hooks = 1;
    for (int i = 0; i < shape.rows(); i++) {
        for (int j = 0; j < shape.row(i); j++) {
            hooks *= shape.hook(i, j);
        }
    }
    return factorial(shape.size()) / hooks;
}

BigInt unitary_dim(const Partition &shape, int k) {
    if (shape.rows() > k) {
        return 0;
    }
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < shape.rows(); i++) {
        for (int j = 0; j < shape.row(i); j++) {
            num *= k + j - i;
            den *= shape.hook(i, j);
        }
    }
    return num / den;
}

std::vector<Tableau> enumerate_syt_column_lex(const Partition &shape) {
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) {
        rows.emplace_back(p, 0);
    }
    std::vector<int> filled(shape.rows(), 0);
    syt_rec(shape, 1, rows, filled, out);
    std::vector<std::pair<std::vector<int>, size_t>> keys;
    keys.reserve(out.size());
    for (size_t i = 0; i < out.size(); i++) {
        keys.emplace_back(out[i].column_word(), i);
    }
    std::sort(keys.begin(), keys.end());
    std::vector<Tableau> sorted;
    sorted.reserve(out.size());
    for (const auto &key : keys) {
        sorted.push_back(out[key.second]);
    }
    return sorted;
}

std::vector<ClassifiedTableau> enumerate_syt(const Partition &shape, int k) {
    std::vector<ClassifiedTableau> out;
    for (auto &t : enumerate_syt_column_lex(shape)) {
        TableauClass cls = classify(t, k);
        out.push_back({std::move(t), cls});
    }
    std::stable_sort(out.begin(), out.end(), [](const ClassifiedTableau &a, const ClassifiedTableau &b) {
        return static_cast<int>(a.cls) < static_cast<int>(b.cls);
    });
    return out;
}

BigInt skew_syt_dim(const SkewShape &shape) {
    if (!shape.valid()) {
        return 0;
    }
    int l = shape.outer.rows();
    if (l == 0) {
        return 1;
    }
    std::vector<std::vector<Rational>> a(l, std::vector<Rational>(l));
    for (int i = 0; i < l; i++) {
        for (int j = 0; j < l; j++) {
            a[i][j] = inverse_factorial(shape.outer.row(i) - shape.inner.row(j) - i + j);
        }
    }
    Rational count = determinant(std::move(a)) * Rational(factorial(shape.size()));
    if (denominator(count) != 1) {
        throw std::logic_error("skew_syt_dim: non-integral determinant");
    }
    return numerator(count);
}

std::uint64_t block_size(const Partition &shape, int k) {
    if (shape.rows() != k) {
        throw std::invalid_argument("block_size: shape " + shape.str() + " does not have exactly " +
                                    std::to_string(k) + " rows");
    }
    BigInt total = skew_syt_dim({shape, Partition::column(k)});
    if (auto s = Partition::s_inner(k)) {
        total += skew_syt_dim({shape, *s});
    }
    return total.convert_to<std::uint64_t>();
}

}  // namespace kbp
