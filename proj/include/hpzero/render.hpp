#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hpzero/series.hpp"

namespace hpzero {

using Json = nlohmann::ordered_json;

// Aligned plain-text table; numeric-looking columns are right-aligned.
std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows);

// RFC-style CSV with a header row; cells containing separators are quoted.
std::string render_csv(const std::vector<std::string>& headers,
                       const std::vector<std::vector<std::string>>& rows);

// Canonical JSON rendering: two-space indent, trailing newline.  Parsing the
// output and re-rendering reproduces it byte for byte.
std::string render_json(const Json& j);

// {"truncation": {"t": T, "s": N}, "terms": [{"t": w, "s": n, "coef": c}]}
Json biseries_json(const BiSeries& f);
// {"truncation": {"t": T}, "terms": [{"t": w, "coef": c}]}
Json series_json(const Series& f);

Json int_json(const Int& n);  // number when it fits in 64 bits, else string

}  // namespace hpzero
