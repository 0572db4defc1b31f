#include "tablecount/margins.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "tablecount/errors.hpp"

namespace tablecount {

namespace {

using int128 = __int128;

std::int64_t checked(int128 v, const char* what) {
    if (v > int128(std::numeric_limits<std::int64_t>::max()))
        throw TooLargeError(std::string("margin aggregate overflows 64 bits: ") + what);
    return static_cast<std::int64_t>(v);
}

void strip_zeros(std::vector<std::int64_t>& v, const char* side) {
    std::size_t w = 0;
    for (std::int64_t x : v) {
        if (x < 0)
            throw DomainError(std::string("negative margin entry on ") + side);
        if (x > 0) v[w++] = x;
    }
    v.resize(w);
}

}  // namespace

Margins::Margins(std::vector<std::int64_t> row_sums, std::vector<std::int64_t> col_sums)
    : rows_(std::move(row_sums)), cols_(std::move(col_sums)) {
    strip_zeros(rows_, "rows");
    strip_zeros(cols_, "cols");
    if (rows_.empty() || cols_.empty())
        throw EmptyMarginsError("margins empty after removing zero entries");

    int128 rsum = 0, csum = 0, r2 = 0, c2 = 0;
    int128 fr2 = 0, fr3 = 0, fc2 = 0, fc3 = 0;
    for (std::int64_t r : rows_) {
        rsum += r;
        r2 += int128(r) * r;
        fr2 += int128(r) * (r - 1);
        fr3 += int128(r) * (r - 1) * (r - 2);
    }
    for (std::int64_t c : cols_) {
        csum += c;
        c2 += int128(c) * c;
        fc2 += int128(c) * (c - 1);
        fc3 += int128(c) * (c - 1) * (c - 2);
    }
    if (rsum != csum) {
        std::ostringstream msg;
        msg << "row sum " << static_cast<long long>(rsum) << " != col sum "
            << static_cast<long long>(csum);
        throw SumMismatchError(msg.str());
    }
    total_ = checked(rsum, "N");
    row_sq_ = checked(r2, "r^2");
    col_sq_ = checked(c2, "c^2");
    falling_.r2 = checked(fr2, "R_2");
    falling_.r3 = checked(fr3, "R_3");
    falling_.c2 = checked(fc2, "C_2");
    falling_.c3 = checked(fc3, "C_3");
}

Margins parse_margins(std::istream& in) {
    std::vector<std::int64_t> rows, cols;
    bool have_r = false, have_c = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        std::vector<std::int64_t>* dest = nullptr;
        if (tag == "r:") {
            dest = &rows;
            have_r = true;
        } else if (tag == "c:") {
            dest = &cols;
            have_c = true;
        } else {
            throw DomainError("margins file: expected 'r:' or 'c:' line, got '" + tag + "'");
        }
        std::int64_t x;
        while (ls >> x) dest->push_back(x);
        if (!ls.eof()) throw DomainError("margins file: non-integer token in '" + line + "'");
    }
    if (!have_r || !have_c) throw DomainError("margins file: need both 'r:' and 'c:' lines");
    return Margins(std::move(rows), std::move(cols));
}

Margins parse_margins_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open margins file: " + path);
    return parse_margins(in);
}

std::string format_margins(const Margins& margins) {
    std::ostringstream out;
    out << "r:";
    for (std::int64_t r : margins.rows()) out << ' ' << r;
    out << "\nc:";
    for (std::int64_t c : margins.cols()) out << ' ' << c;
    out << '\n';
    return out.str();
}

}  // namespace tablecount
