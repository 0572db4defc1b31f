#ifndef TABLECOUNT_MARGINS_HPP
#define TABLECOUNT_MARGINS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tablecount {

// Power sums of falling factorials of the margins:
//   R_k = sum_i r_i (r_i - 1) ... (r_i - k + 1), and C_k likewise.
struct FallingFactorialSums {
    std::int64_t r2 = 0;
    std::int64_t r3 = 0;
    std::int64_t c2 = 0;
    std::int64_t c3 = 0;
};

// Validated margin pair. Zero entries are stripped at construction (they
// do not change the count); afterwards every entry is >= 1, both vectors
// are nonempty, and the sums agree. Immutable once built.
class Margins {
  public:
    // Throws SumMismatchError / EmptyMarginsError / TooLargeError.
    Margins(std::vector<std::int64_t> row_sums, std::vector<std::int64_t> col_sums);

    const std::vector<std::int64_t>& rows() const { return rows_; }
    const std::vector<std::int64_t>& cols() const { return cols_; }
    std::size_t m() const { return rows_.size(); }
    std::size_t n() const { return cols_.size(); }

    std::int64_t total() const { return total_; }    // N
    std::int64_t col_sq() const { return col_sq_; }  // sum c_j^2
    std::int64_t row_sq() const { return row_sq_; }  // sum r_i^2
    const FallingFactorialSums& falling_sums() const { return falling_; }

    bool all_cols_one() const { return col_sq_ == total_; }
    bool all_rows_one() const { return row_sq_ == total_; }

    Margins transposed() const { return Margins(cols_, rows_); }

    bool operator==(const Margins& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

  private:
    std::vector<std::int64_t> rows_;
    std::vector<std::int64_t> cols_;
    std::int64_t total_;
    std::int64_t col_sq_;
    std::int64_t row_sq_;
    FallingFactorialSums falling_;
};

inline Margins validate_margins(std::vector<std::int64_t> rows, std::vector<std::int64_t> cols) {
    return Margins(std::move(rows), std::move(cols));
}

// Text fixture format, two lines:
//   r: 3 1 2
//   c: 2 2 2
Margins parse_margins(std::istream& in);
Margins parse_margins_file(const std::string& path);
std::string format_margins(const Margins& margins);

}  // namespace tablecount

#endif
