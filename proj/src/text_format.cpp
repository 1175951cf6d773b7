#include "normalfield/text_format.hpp"

#include <charconv>

#include "normalfield/errors.hpp"

namespace nf {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::vector<std::uint32_t> parse_codes(const SmallField& field, std::string_view text) {
  std::vector<std::uint32_t> groups;
  for (std::string_view group : split(text, ';')) {
    auto digits = parse_uint_list(group, ',');
    groups.push_back(field.from_digits(digits));
  }
  return groups;
}

}  // namespace

std::vector<std::uint32_t> parse_uint_list(std::string_view text, char sep) {
  text = strip(text);
  if (text.empty()) throw UsageError("expected a list of integers, got an empty string");
  std::vector<std::uint32_t> out;
  for (std::string_view part : split(text, sep)) {
    part = strip(part);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw UsageError("malformed integer '" + std::string(part) + "' in '" + std::string(text) + "'");
    }
    out.push_back(value);
  }
  return out;
}

FqPoly parse_poly(const SmallFieldPtr& field, std::string_view text) {
  auto codes = parse_uint_list(text, ',');
  for (auto c : codes) {
    if (!field->contains(c)) {
      throw UsageError("coefficient " + std::to_string(c) + " is not a code in F_" + std::to_string(field->order()));
    }
  }
  return FqPoly(field, std::move(codes));
}

std::string format_poly(const FqPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.coeffs()[i]);
  }
  return out;
}

FieldElement parse_element(const FieldTower& tower, std::string_view text) {
  return tower.element(parse_codes(*tower.base_field(), text));
}

GroupRingElement parse_group_ring_element(const GroupRing& ring, std::string_view text) {
  return ring.element(parse_codes(*ring.tower().base_field(), text));
}

}  // namespace nf
