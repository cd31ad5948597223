#include "lrs/format.hpp"

#include <charconv>
#include <cstdio>

#include "lrs/error.hpp"

namespace lrs {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    auto end = text.find(sep, pos);
    if (end == std::string_view::npos) {
      out.push_back(text.substr(pos));
      return out;
    }
    out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
}

}  // namespace

std::vector<Weight> parse_weights(std::string_view text, int rank) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty weight list");
  std::vector<Weight> out;
  for (auto part : split(text, ';')) {
    auto fields = split(part, ',');
    if (static_cast<int>(fields.size()) != rank)
      throw Error(ErrorKind::Parse, "weight '" + std::string(part) + "' needs " + std::to_string(rank) + " coordinates");
    Weight w(static_cast<std::size_t>(rank));
    for (std::size_t j = 0; j < fields.size(); ++j) {
      std::int64_t v = 0;
      auto f = fields[j];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size())
        throw Error(ErrorKind::Parse, "bad coordinate '" + std::string(f) + "'");
      w[j] = v;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::string format_weight(const Weight& w) {
  std::string out;
  for (std::size_t j = 0; j < w.rank(); ++j) {
    if (j) out += ',';
    out += std::to_string(w[j]);
  }
  return out;
}

std::string format_weights(const std::vector<Weight>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ';';
    out += format_weight(ws[i]);
  }
  return out;
}

ElementTuple parse_tuple(std::string_view text, const WeylGroup& g) {
  const char sep = text.find(';') != std::string_view::npos ? ';' : ',';
  ElementTuple out;
  for (auto part : split(text, sep))
    out.push_back(g.index_of(WeylElement::from_word(g.root_system(), parse_word(part, g.rs().rank()))));
  return out;
}

std::string format_tuple(const WeylGroup& g, const ElementTuple& t, char sep) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += sep;
    out += g.element(t[i]).to_string();
  }
  return out;
}

std::string to_string(StableMultOne s) {
  switch (s.status) {
    case StableStatus::ProvenTrue: return "ProvenTrue";
    case StableStatus::RefutedAtK: return "RefutedAtK(" + std::to_string(s.k) + ", dim=" + std::to_string(s.dim) + ")";
    case StableStatus::UnknownUpTo: return "UnknownUpTo(" + std::to_string(s.k) + ")";
  }
  return "?";
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lrs
