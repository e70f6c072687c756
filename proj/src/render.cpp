#include "hpzero/render.hpp"

#include <algorithm>
#include <cctype>

namespace hpzero {

namespace {

bool numeric_cell(const std::string& cell) {
  if (cell.empty()) return true;
  for (char ch : cell)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '/' &&
        ch != '.')
      return false;
  return true;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows) {
  std::size_t ncols = headers.size();
  std::vector<std::size_t> width(ncols);
  std::vector<bool> right(ncols, true);
  for (std::size_t c = 0; c < ncols; ++c) width[c] = headers[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < ncols && c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
      right[c] = right[c] && numeric_cell(row[c]);
    }
  auto pad = [&](const std::string& cell, std::size_t c) {
    std::string fill(width[c] - cell.size(), ' ');
    return right[c] ? fill + cell : cell + fill;
  };
  std::string out;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (c) out += "  ";
    out += pad(headers[c], c);
  }
  out += '\n';
  for (std::size_t c = 0; c < ncols; ++c) {
    if (c) out += "  ";
    out += std::string(width[c], '-');
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < ncols; ++c) {
      if (c) out += "  ";
      out += pad(c < row.size() ? row[c] : "", c);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

std::string render_csv(const std::vector<std::string>& headers,
                       const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += ',';
      out += csv_escape(cells[c]);
    }
    out += '\n';
  };
  line(headers);
  for (const auto& row : rows) line(row);
  return out;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

Json int_json(const Int& n) {
  if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(n.get_str());
}

Json biseries_json(const BiSeries& f) {
  Json j;
  j["truncation"] = {{"t", f.t_known_to()}, {"s", f.s_known_to()}};
  Json terms = Json::array();
  for (const auto& [key, coef] : f.terms()) {
    Json term;
    term["t"] = key.first;
    term["s"] = key.second;
    term["coef"] = int_json(coef);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

Json series_json(const Series& f) {
  Json j;
  j["truncation"] = {{"t", f.known_to()}};
  Json terms = Json::array();
  for (const auto& [e, coef] : f.terms()) {
    Json term;
    term["t"] = e;
    term["coef"] = int_json(coef);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

}  // namespace hpzero
