#ifndef QSURG_ALIST_HPP
#define QSURG_ALIST_HPP

#include <string>

#include "qsurg/gf2.hpp"

// MacKay alist interchange format. Layout: "n m", "max_col_w max_row_w",
// per-column weights, per-row weights, then 1-based index lists per column and
// per row. Zero entries are padding and are ignored; both padded and unpadded
// files parse. n counts bits (columns), m counts checks (rows).

namespace qsurg {

struct AlistError : std::runtime_error {
    explicit AlistError(const std::string& what) : std::runtime_error("alist: " + what) {}
};

BinaryMatrix parse_alist(const std::string& text);

// Emits the padded layout; parse_alist(emit_alist(M)) == M bit-exactly.
std::string emit_alist(const BinaryMatrix& m);

}  // namespace qsurg

#endif
