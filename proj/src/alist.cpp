#include "qsurg/alist.hpp"

#include <numeric>
#include <sstream>

namespace qsurg {

namespace {

std::vector<long long> tokenize(const std::string& text) {
    std::vector<long long> tokens;
    std::istringstream is(text);
    long long v;
    while (is >> v) tokens.push_back(v);
    if (!is.eof()) {
        is.clear();
        std::string junk;
        if (is >> junk) throw AlistError("non-numeric token '" + junk + "'");
    }
    return tokens;
}

}  // namespace

BinaryMatrix parse_alist(const std::string& text) {
    std::vector<long long> t = tokenize(text);
    std::size_t pos = 0;
    auto next = [&](const char* what) {
        if (pos >= t.size()) throw AlistError(std::string("truncated file, expected ") + what);
        return t[pos++];
    };
    long long n = next("n"), m = next("m");
    if (n < 0 || m < 0) throw AlistError("negative dimensions in header");
    long long maxcw = next("max column weight"), maxrw = next("max row weight");
    std::vector<long long> colw, roww;
    for (long long j = 0; j < n; ++j) colw.push_back(next("column weight"));
    for (long long i = 0; i < m; ++i) roww.push_back(next("row weight"));
    for (long long w : colw)
        if (w < 0 || w > maxcw) throw AlistError("column weight outside [0, max]");
    for (long long w : roww)
        if (w < 0 || w > maxrw) throw AlistError("row weight outside [0, max]");

    long long remaining = (long long)(t.size() - pos);
    long long padded = n * maxcw + m * maxrw;
    long long exact = std::accumulate(colw.begin(), colw.end(), 0ll) +
                      std::accumulate(roww.begin(), roww.end(), 0ll);
    bool is_padded;
    if (remaining == padded)
        is_padded = true;
    else if (remaining == exact)
        is_padded = false;
    else
        throw AlistError("index section length matches neither the padded nor the exact layout");

    BinaryMatrix from_cols((int)m, (int)n);
    for (long long j = 0; j < n; ++j) {
        long long count = is_padded ? maxcw : colw[std::size_t(j)];
        long long seen = 0;
        for (long long s = 0; s < count; ++s) {
            long long idx = next("column entry");
            if (idx == 0) continue;  // padding
            if (idx < 1 || idx > m) throw AlistError("row index out of range in column list");
            if (from_cols.get((int)(idx - 1), (int)j)) throw AlistError("duplicate entry in column list");
            from_cols.set((int)(idx - 1), (int)j, true);
            ++seen;
        }
        if (seen != colw[std::size_t(j)]) throw AlistError("column weight disagrees with its index list");
    }
    BinaryMatrix from_rows((int)m, (int)n);
    for (long long i = 0; i < m; ++i) {
        long long count = is_padded ? maxrw : roww[std::size_t(i)];
        long long seen = 0;
        for (long long s = 0; s < count; ++s) {
            long long idx = next("row entry");
            if (idx == 0) continue;
            if (idx < 1 || idx > n) throw AlistError("column index out of range in row list");
            if (from_rows.get((int)i, (int)(idx - 1))) throw AlistError("duplicate entry in row list");
            from_rows.set((int)i, (int)(idx - 1), true);
            ++seen;
        }
        if (seen != roww[std::size_t(i)]) throw AlistError("row weight disagrees with its index list");
    }
    if (pos != t.size()) throw AlistError("trailing tokens");
    if (!(from_cols == from_rows)) throw AlistError("column and row lists describe different matrices");
    return from_cols;
}

std::string emit_alist(const BinaryMatrix& mat) {
    int m = mat.rows(), n = mat.cols();
    std::vector<int> colw(std::size_t(n), 0), roww(std::size_t(m), 0);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if (mat.get(r, c)) {
                ++colw[std::size_t(c)];
                ++roww[std::size_t(r)];
            }
    int maxcw = colw.empty() ? 0 : *std::max_element(colw.begin(), colw.end());
    int maxrw = roww.empty() ? 0 : *std::max_element(roww.begin(), roww.end());

    std::ostringstream os;
    os << n << ' ' << m << '\n' << maxcw << ' ' << maxrw << '\n';
    for (int c = 0; c < n; ++c) os << colw[std::size_t(c)] << (c + 1 == n ? '\n' : ' ');
    if (n == 0) os << '\n';
    for (int r = 0; r < m; ++r) os << roww[std::size_t(r)] << (r + 1 == m ? '\n' : ' ');
    if (m == 0) os << '\n';
    for (int c = 0; c < n; ++c) {
        int emitted = 0;
        for (int r = 0; r < m; ++r)
            if (mat.get(r, c)) {
                os << (emitted++ ? " " : "") << (r + 1);
            }
        for (; emitted < maxcw; ++emitted) os << (emitted ? " " : "") << 0;
        os << '\n';
    }
    for (int r = 0; r < m; ++r) {
        int emitted = 0;
        for (int c = 0; c < n; ++c)
            if (mat.get(r, c)) {
                os << (emitted++ ? " " : "") << (c + 1);
            }
        for (; emitted < maxrw; ++emitted) os << (emitted ? " " : "") << 0;
        os << '\n';
    }
    return os.str();
}

}  // namespace qsurg
