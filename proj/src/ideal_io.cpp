#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hurwitz/ideal.hpp"

namespace hurwitz {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string_view field_value(std::string_view header, std::string_view key) {
  std::string needle = std::string(key) + "=";
  std::size_t pos = header.find(needle);
  if (pos == std::string_view::npos) throw std::invalid_argument("ideal header lacks " + std::string(key));
  std::size_t start = pos + needle.size();
  std::size_t end = header.find(' ', start);
  return header.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
}

// "{1,0},{1,0},{0,1}" -> {{1,0},{1,0},{0,1}}
std::vector<MultiDegree> parse_degrees(std::string_view s) {
  std::vector<MultiDegree> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] != '{') throw std::invalid_argument("malformed degree list");
    std::size_t close = s.find('}', i);
    if (close == std::string_view::npos) throw std::invalid_argument("malformed degree list");
    MultiDegree d;
    for (const auto& part : split(s.substr(i + 1, close - i - 1), ',')) d.push_back(std::stoi(part));
    out.push_back(std::move(d));
    i = close + 1;
  }
  return out;
}

}  // namespace

std::string format_ideal(const Ideal& ideal) {
  std::string out = ideal.ring().header();
  out += '\n';
  for (const auto& g : ideal.generators()) {
    out += g.to_string();
    out += '\n';
  }
  return out;
}

Ideal parse_ideal(std::string_view text) {
  std::vector<std::string> lines = split(text, '\n');
  std::size_t k = 0;
  while (k < lines.size() && lines[k].empty()) ++k;
  if (k == lines.size()) throw std::invalid_argument("empty ideal text");
  std::string_view header = lines[k];
  if (header.substr(0, 5) != "ring ") throw std::invalid_argument("ideal text must start with a ring header");
  auto p = static_cast<std::uint32_t>(std::stoul(std::string(field_value(header, "p"))));
  std::vector<std::string> names = split(field_value(header, "vars"), ',');
  std::vector<MultiDegree> degrees = parse_degrees(field_value(header, "degrees"));
  RingPtr ring = PolyRing::create(p, std::move(names), std::move(degrees));
  std::vector<Polynomial> gens;
  for (++k; k < lines.size(); ++k) {
    if (lines[k].empty() || lines[k][0] == '#') continue;
    gens.push_back(Polynomial::parse(ring, lines[k]));
  }
  return Ideal(ring, std::move(gens));
}

void write_ideal_file(const std::string& path, const Ideal& ideal) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_ideal(ideal);
}

Ideal read_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

}  // namespace hurwitz
