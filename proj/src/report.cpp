#include "braidkit/report.hpp"

#include <algorithm>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

#include "braidkit/alexander.hpp"
#include "braidkit/closure.hpp"

namespace braidkit {

namespace {

std::string aligned(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size(), ' ') << " : " << value << '\n';
  }
  return out.str();
}

void surface_rows(std::vector<std::pair<std::string, std::string>>& rows,
                  const SurfaceSummary& s) {
  rows.emplace_back("surface strands", std::to_string(s.strands));
  rows.emplace_back("surface bands", std::to_string(s.bands));
  rows.emplace_back("euler characteristic", std::to_string(s.euler_characteristic));
  rows.emplace_back("surface genus", s.genus ? to_string(*s.genus) : "n/a");
}

}  // namespace

InvariantReport make_report(const BraidWord& w, const ReportOptions& options) {
  InvariantReport r;
  const ClosureSummary summary = closure_summary(w);
  r.word = to_string(w);
  r.strands = w.strands();
  r.components = summary.components;
  r.exponent_sum = summary.exponent_sum;
  r.self_linking = summary.self_linking;
  r.alexander = alexander_polynomial(w);
  r.alexander_breadth = r.alexander.breadth();
  r.genus_bound = alexander_genus_bound(r.alexander);
  if (options.jones) r.jones = jones_polynomial(w, options.max_strands);
  return r;
}

std::string to_text(const InvariantReport& r) {
  std::vector<std::pair<std::string, std::string>> rows{
      {"word", r.word.empty() ? "(empty)" : r.word},
      {"strands", std::to_string(r.strands)},
      {"components", std::to_string(r.components)},
      {"exponent sum", std::to_string(r.exponent_sum)},
      {"self-linking", std::to_string(r.self_linking)},
      {"alexander", to_string(r.alexander)},
      {"alexander breadth", std::to_string(r.alexander_breadth)},
      {"genus bound", to_string(r.genus_bound)},
  };
  if (r.jones) rows.emplace_back("jones", to_string(*r.jones));
  if (r.surface) surface_rows(rows, *r.surface);
  return aligned(rows);
}

std::string to_text(const SurfaceSummary& s) {
  std::vector<std::pair<std::string, std::string>> rows{
      {"components", std::to_string(s.components)}};
  surface_rows(rows, s);
  return aligned(rows);
}

}  // namespace braidkit
