#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kbp {

using BigInt = boost::multiprecision::cpp_int;

/// Integer partition with weakly decreasing positive parts.
class Partition {
   public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    /// (1^k)
    static Partition column(int k);
    /// (2,1^{k-2}); (2) for k = 2; nullopt for k = 1.
    static std::optional<Partition> s_inner(int k);

    int size() const {
        return n_;
    }
    int rows() const {
        return static_cast<int>(parts_.size());
    }
    /// Row length, 0 past the last row.
    int row(int i) const {
        return i < rows() ? parts_[i] : 0;
    }
    /// Number of boxes in column j.
    int column_length(int j) const;
    const std::vector<int> &parts() const {
        return parts_;
    }
    bool contains(const Partition &inner) const;
    /// Hook length of box (i, j), 0-based.
    int hook(int i, int j) const;
    /// "(3,2,1)"; the empty partition prints as "()".
    std::string str() const;
    /// Parses "3,2,1" or "(3,2,1)".
    static Partition parse(const std::string &text);

    auto operator<=>(const Partition &other) const {
        return parts_ <=> other.parts_;
    }
    bool operator==(const Partition &other) const = default;

   private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    bool valid() const {
        return outer.contains(inner);
    }
    int size() const {
        return outer.size() - inner.size();
    }
};

struct Box {
    int row;
    int col;
    int content() const {
        return col - row;
    }
    bool operator==(const Box &other) const = default;
};

/// Filling of a partition's boxes, addressed (row, col) 0-based.
class Tableau {
   public:
    Tableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition &shape() const {
        return shape_;
    }
    int at(int row, int col) const {
        return rows_[row][col];
    }
    const std::vector<std::vector<int>> &rows() const {
        return rows_;
    }
    /// Box holding entry v (1-based).
    Box position_of(int v) const;
    /// Entries read column by column, top to bottom.
    std::vector<int> column_word() const;
    bool is_standard() const;
    /// Rows separated by '/', e.g. "13/2".
    std::string str() const;

    bool operator==(const Tableau &other) const = default;

   private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Box> positions_;
};

enum class TableauClass { A, S, M };

char class_letter(TableauClass c);
TableauClass classify(const Tableau &t, int k);

struct ClassifiedTableau {
    Tableau tableau;
    TableauClass cls;
};

/// Partitions of n with exactly `exact_rows` parts, lexicographically descending.
std::vector<Partition> enumerate_partitions(int n, int exact_rows);
/// Partitions of n with at most `max_rows` parts, lexicographically descending.
std::vector<Partition> partitions_at_most(int n, int max_rows);

BigInt factorial(int n);
/// Hook length formula.
BigInt syt_dim(const Partition &shape);
/// Weyl dimension of the GL(k) irrep; 0 if the shape has more than k rows.
BigInt unitary_dim(const Partition &shape, int k);
/// All standard tableaux, ordered class-major (A, S, M) and by column word within a class.
std::vector<ClassifiedTableau> enumerate_syt(const Partition &shape, int k);
/// All standard tableaux in column-word order, without classification.
std::vector<Tableau> enumerate_syt_column_lex(const Partition &shape);
/// Aitken determinant; 0 when inner is not contained in outer.
BigInt skew_syt_dim(const SkewShape &shape);
/// d_lambda = |A| + |S|. Throws std::invalid_argument unless shape has exactly k rows.
std::uint64_t block_size(const Partition &shape, int k);

}  // namespace kbp
