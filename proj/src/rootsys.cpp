#include "lrs/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "lrs/error.hpp"

namespace lrs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::MixedRootSystems: return "MixedRootSystems";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NonDominantInput: return "NonDominantInput";
    case ErrorKind::OracleOverflow: return "OracleOverflow";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "UnknownError";
}

// ---------------------------------------------------------------- GroupType

GroupType GroupType::make(char series, int rank) {
  series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E':
      if (rank == 7 || rank == 8)
        throw Error(ErrorKind::UnsupportedType, "E7/E8 exceed the Weyl group size guard");
      ok = rank == 6;
      break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default:
      throw Error(ErrorKind::UnsupportedType, std::string("unknown series '") + series + "'");
  }
  if (!ok)
    throw Error(ErrorKind::UnsupportedType,
                std::string("invalid rank ") + std::to_string(rank) + " for series " + series);
  return GroupType{series, rank};
}

GroupType GroupType::parse(std::string_view text) {
  if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
    throw Error(ErrorKind::Parse, "group type must look like A2, B3, G2: '" + std::string(text) + "'");
  int rank = 0;
  auto rest = text.substr(1);
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), rank);
  if (ec != std::errc() || ptr != rest.data() + rest.size())
    throw Error(ErrorKind::Parse, "bad rank in group type '" + std::string(text) + "'");
  return make(text[0], rank);
}

std::string GroupType::name() const { return std::string(1, series) + std::to_string(rank); }

// ---------------------------------------------------------------- Weight

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

bool Weight::is_strictly_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c > 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (std::size_t i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
  return os << ')';
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto c : w.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- RootSystem

namespace {

struct DynkinData {
  std::vector<std::int64_t> norms;  // (alpha_i, alpha_i)
  std::vector<std::vector<std::int64_t>> form;  // (alpha_i, alpha_j)
};

DynkinData dynkin(GroupType t) {
  const int r = t.rank;
  DynkinData d;
  d.norms.assign(static_cast<std::size_t>(r), 2);
  d.form.assign(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(r), 0));
  auto edge = [&](int i, int j, std::int64_t value) {
    d.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
    d.form[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = value;
  };
  switch (t.series) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < r - 1; ++i) d.norms[static_cast<std::size_t>(i)] = 4;
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, -2);
      break;
    case 'C':
      d.norms[static_cast<std::size_t>(r - 1)] = 4;
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1, -1);
      edge(r - 2, r - 1, -2);
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1, -1);
      edge(r - 3, r - 1, -1);
      break;
    case 'E':
      edge(0, 2, -1);
      edge(2, 3, -1);
      edge(3, 4, -1);
      edge(4, 5, -1);
      edge(1, 3, -1);
      break;
    case 'F':
      d.norms = {4, 4, 2, 2};
      edge(0, 1, -2);
      edge(1, 2, -2);
      edge(2, 3, -1);
      break;
    case 'G':
      d.norms = {2, 6};
      edge(0, 1, -3);
      break;
    default:
      throw Error(ErrorKind::UnsupportedType, t.name());
  }
  for (int i = 0; i < r; ++i)
    d.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = d.norms[static_cast<std::size_t>(i)];
  return d;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(GroupType type) {
  type = GroupType::make(type.series, type.rank);
  const int r = type.rank;
  const auto ur = static_cast<std::size_t>(r);
  auto data = dynkin(type);

  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->type_ = type;
  rs->norms_ = data.norms;
  rs->cartan_.resize(ur * ur);
  for (std::size_t i = 0; i < ur; ++i)
    for (std::size_t j = 0; j < ur; ++j) rs->cartan_[i * ur + j] = 2 * data.form[i][j] / data.norms[j];

  // Close the simple roots under root strings, one height at a time.
  using Coords = std::vector<std::int64_t>;
  std::set<Coords> all;
  std::vector<Coords> layer;
  for (std::size_t i = 0; i < ur; ++i) {
    Coords c(ur, 0);
    c[i] = 1;
    all.insert(c);
    layer.push_back(c);
  }
  while (!layer.empty()) {
    std::vector<Coords> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < ur; ++i) {
        std::int64_t p = 0;
        for (Coords down = beta;;) {
          down[i] -= 1;
          if (!all.count(down)) break;
          ++p;
        }
        std::int64_t pair = 0;  // <beta, alpha_i^vee>
        for (std::size_t j = 0; j < ur; ++j) pair += beta[j] * rs->cartan_[j * ur + i];
        if (p - pair > 0) {
          Coords up = beta;
          up[i] += 1;
          if (all.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }

  std::vector<Coords> roots(all.begin(), all.end());
  auto height = [](const Coords& c) {
    std::int64_t h = 0;
    for (auto x : c) h += x;
    return h;
  };
  std::sort(roots.begin(), roots.end(), [&](const Coords& a, const Coords& b) {
    auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;  // alpha_1 before alpha_2 before ...
  });

  rs->roots_ = roots;
  for (const auto& beta : roots) {
    rs->heights_.push_back(static_cast<int>(height(beta)));
    rs->roots_fw_.push_back(rs->to_fw(beta));
    std::int64_t norm = 0;
    for (std::size_t i = 0; i < ur; ++i)
      for (std::size_t j = 0; j < ur; ++j) norm += beta[i] * beta[j] * data.form[i][j];
    Coords co(ur);
    for (std::size_t j = 0; j < ur; ++j) co[j] = beta[j] * data.norms[j] / norm;
    rs->coroots_.push_back(co);
  }
  for (int k = 0; k < rs->n_pos(); ++k) {
    rs->lookup_.emplace(rs->roots_fw_[static_cast<std::size_t>(k)], SignedRoot{k, +1});
    rs->lookup_.emplace(-rs->roots_fw_[static_cast<std::size_t>(k)], SignedRoot{k, -1});
  }
  rs->rho_ = Weight(std::vector<std::int64_t>(ur, 1));
  return rs;
}

std::span<const std::int64_t> RootSystem::root(int index) const {
  if (index < 0 || index >= n_pos()) throw Error(ErrorKind::IndexOutOfRange, "root index " + std::to_string(index));
  return roots_[static_cast<std::size_t>(index)];
}

const Weight& RootSystem::root_fw(int index) const {
  if (index < 0 || index >= n_pos()) throw Error(ErrorKind::IndexOutOfRange, "root index " + std::to_string(index));
  return roots_fw_[static_cast<std::size_t>(index)];
}

std::span<const std::int64_t> RootSystem::coroot(int index) const {
  if (index < 0 || index >= n_pos()) throw Error(ErrorKind::IndexOutOfRange, "root index " + std::to_string(index));
  return coroots_[static_cast<std::size_t>(index)];
}

int RootSystem::height(int index) const {
  if (index < 0 || index >= n_pos()) throw Error(ErrorKind::IndexOutOfRange, "root index " + std::to_string(index));
  return heights_[static_cast<std::size_t>(index)];
}

std::int64_t RootSystem::pairing(const Weight& lam, int coroot_index) const {
  if (coroot_index < 0 || coroot_index >= n_pos())
    throw Error(ErrorKind::IndexOutOfRange, "coroot index " + std::to_string(coroot_index));
  if (!validate_weight(lam)) throw Error(ErrorKind::RankMismatch, "weight rank differs from group rank");
  const auto& co = coroots_[static_cast<std::size_t>(coroot_index)];
  std::int64_t s = 0;
  for (std::size_t j = 0; j < co.size(); ++j) s += co[j] * lam[j];
  return s;
}

std::int64_t RootSystem::form2(const Weight& lam, int root_index) const {
  return form2_root(lam, root(root_index));
}

std::int64_t RootSystem::form2_root(const Weight& lam, std::span<const std::int64_t> beta) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * lam[j] * norms_[j];
  return s;
}

std::optional<RootSystem::SignedRoot> RootSystem::find_root_fw(const Weight& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Weight RootSystem::to_fw(std::span<const std::int64_t> simple_coords) const {
  const auto ur = static_cast<std::size_t>(rank());
  Weight out(ur);
  for (std::size_t i = 0; i < ur; ++i)
    for (std::size_t j = 0; j < ur; ++j) out[j] += simple_coords[i] * cartan_[i * ur + j];
  return out;
}

}  // namespace lrs
