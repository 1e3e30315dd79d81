#include "ldstat/stats/stats.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "ldstat/error.hpp"
#include "ldstat/inference/inference.hpp"

namespace ldstat::stats {

std::string to_decimal(const Ratio& r, int max_digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < max_digits; ++i) scale *= 10;
  const bool negative = r < 0;
  const std::int64_t num = negative ? -r.numerator() : r.numerator();
  const std::int64_t den = r.denominator();

  // scaled = round_half_even(num * scale / den), computed without overflowing num * scale.
  const std::int64_t whole = num / den;
  const std::int64_t rest = num % den;
  std::int64_t frac = static_cast<std::int64_t>((static_cast<__int128>(rest) * scale) / den);
  const std::int64_t rem = static_cast<std::int64_t>((static_cast<__int128>(rest) * scale) % den);
  std::int64_t int_part = whole;
  if (2 * static_cast<__int128>(rem) > den || (2 * static_cast<__int128>(rem) == den && frac % 2 == 1)) ++frac;
  if (frac == scale) {
    frac = 0;
    ++int_part;
  }

  std::string digits = std::to_string(frac);
  digits.insert(0, static_cast<std::size_t>(max_digits) - digits.size(), '0');
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (digits.empty()) digits = "0";
  std::string out = (negative && (int_part != 0 || frac != 0)) ? "-" : "";
  return out + std::to_string(int_part) + "." + digits;
}

Ratio parse_ratio(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("not a number: " + std::string(s));
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Ratio(parse_int(text.substr(0, slash)), den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Ratio(parse_int(text));
  const auto frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 17 || frac.find_first_not_of("0123456789") != std::string_view::npos)
    throw std::invalid_argument("not a decimal: " + std::string(text));
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  std::string_view int_text = text.substr(0, dot);
  const bool negative = !int_text.empty() && int_text.front() == '-';
  if (negative || (!int_text.empty() && int_text.front() == '+')) int_text.remove_prefix(1);
  const std::int64_t whole = int_text.empty() ? 0 : parse_int(int_text);
  const Ratio magnitude = Ratio(whole) + Ratio(parse_int(frac), scale);
  return negative ? -magnitude : magnitude;
}

NamespaceDecl::NamespaceDecl(std::vector<std::string> prefixes) : prefixes_(std::move(prefixes)) {
  if (prefixes_.empty()) throw StatsError("namespace declaration is empty");
  std::sort(prefixes_.begin(), prefixes_.end());
  prefixes_.erase(std::unique(prefixes_.begin(), prefixes_.end()), prefixes_.end());
  for (const auto& p : prefixes_)
    if (!rdf::is_absolute_iri(p)) throw StatsError("namespace is not an absolute IRI: " + p);
  // Sorted, so a nested prefix is immediately followed by a string it prefixes.
  for (std::size_t i = 0; i + 1 < prefixes_.size(); ++i)
    if (prefixes_[i + 1].starts_with(prefixes_[i]))
      throw StatsError("namespace " + prefixes_[i] + " is a prefix of " + prefixes_[i + 1]);
}

bool NamespaceDecl::owns(const rdf::Term& t) const {
  if (!t.is_iri()) return false;
  return std::any_of(prefixes_.begin(), prefixes_.end(),
                     [&](const std::string& p) { return t.value().starts_with(p); });
}

rdf::Graph dataset_closure(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Graph& aux) {
  const auto closed = inference::closure(rdf::unite(g, aux), rules).graph;
  return rdf::subtract(closed, rdf::subtract(aux, g));
}

Ratio redundancy(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Graph& aux) {
  if (g.empty()) throw StatsError("redundancy is undefined for an empty graph");
  const auto minimal = inference::reduce(g, rules, aux);
  return Ratio(1) - Ratio(static_cast<std::int64_t>(minimal.size()), static_cast<std::int64_t>(g.size()));
}

rdf::Graph out_links(const rdf::Graph& g, const NamespaceDecl& ns) {
  rdf::Graph out;
  for (const auto& t : g)
    if (ns.owns(t.subject()) && t.object().is_iri() && !ns.owns(t.object())) out.insert(t);
  return out;
}

namespace {

Ratio density_of(const rdf::Graph& normalized, const NamespaceDecl& ns, const char* which) {
  if (normalized.empty()) throw StatsError(std::string("out-link density is undefined: the ") + which + " is empty");
  return Ratio(static_cast<std::int64_t>(out_links(normalized, ns).size()),
               static_cast<std::int64_t>(normalized.size()));
}

}  // namespace

Ratio out_link_density(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Graph& aux,
                       const NamespaceDecl& ns, DensityMode mode) {
  if (mode == DensityMode::Plus) return density_of(dataset_closure(g, rules, aux), ns, "closure");
  return density_of(inference::reduce(g, rules, aux), ns, "minimal graph");
}

StatsReport compute_stats(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Graph& aux,
                          const std::optional<NamespaceDecl>& ns) {
  if (g.empty()) throw StatsError("statistics are undefined for an empty graph");
  const auto closed = dataset_closure(g, rules, aux);
  const auto minimal = inference::reduce(g, rules, aux);
  StatsReport report;
  report.published_cardinality = g.size();
  report.closure_cardinality = closed.size();
  report.minimal_cardinality = minimal.size();
  report.redundancy =
      Ratio(1) - Ratio(static_cast<std::int64_t>(minimal.size()), static_cast<std::int64_t>(g.size()));
  if (ns) {
    report.out_link_density_plus = density_of(closed, *ns, "closure");
    if (!minimal.empty()) report.out_link_density_minus = density_of(minimal, *ns, "minimal graph");
  }
  return report;
}

}  // namespace ldstat::stats
