#pragma once

#include "real.hpp"
#include "unramified.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace metator {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::int64_t kDefaultSvnLimit = 1024;

/// Integers outside the exactly representable double range become strings.
inline json to_json_int(const Int& x) {
  static const Int limit = Int(1) << 53;
  if (x < limit && x > -limit) return static_cast<std::int64_t>(x);
  return x.str();
}

inline json to_json_vector(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json_int(x));
  return a;
}

inline json to_json_rows(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json_vector(m.row(i)));
  return a;
}

inline json to_json_vectors(const std::vector<Vector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json_vector(v));
  return a;
}

struct ValidationIssue {
  std::string path;
  std::string rule;
};

class validation_error : public error {
public:
  explicit validation_error(std::vector<ValidationIssue> issues)
      : error(summary(issues)), issues(std::move(issues)) {}
  validation_error(std::string path, std::string rule)
      : validation_error(std::vector<ValidationIssue>{{std::move(path), std::move(rule)}}) {}

  std::vector<ValidationIssue> issues;

  json to_json() const {
    json a = json::array();
    for (const auto& i : issues) a.push_back({{"path", i.path}, {"rule", i.rule}});
    return {{"errors", a}};
  }

private:
  static std::string summary(const std::vector<ValidationIssue>& issues) {
    std::string s = "invalid instance";
    for (const auto& i : issues) s += "; " + i.path + ": " + i.rule;
    return s;
  }
};

enum class InstanceKind { unramified, real };

inline std::string kind_name(InstanceKind k) {
  return k == InstanceKind::unramified ? "nonarch-unramified" : "real";
}

struct Caps {
  std::int64_t center = kDefaultCenterCap;
  std::int64_t heisenberg = kDefaultHeisenbergCap;
  std::int64_t real = kDefaultRealCap;
  /// Largest |G| for which the Heisenberg cross-check runs.
  std::int64_t svn = kDefaultSvnLimit;
};

struct InstanceFile {
  int schema_version = kSchemaVersion;
  InstanceKind kind = InstanceKind::unramified;
  std::size_t rank = 1;
  std::uint64_t d = 1;
  Matrix gamma;
  Matrix q_upper;
  std::int64_t q = 0;
  std::int64_t n = 1;
  std::optional<std::vector<Vector>> v_basis;
  Caps caps;
  std::optional<std::uint64_t> seed;

  GammaLattice lattice() const { return GammaLattice(gamma, d); }
  QuadraticForm form() const { return QuadraticForm(q_upper); }
};

inline json to_json(const InstanceFile& f) {
  json j;
  j["schema_version"] = f.schema_version;
  j["kind"] = kind_name(f.kind);
  j["rank"] = f.rank;
  j["d"] = f.d;
  j["gamma"] = to_json_rows(f.gamma);
  j["Q_upper"] = to_json_rows(f.q_upper);
  if (f.kind == InstanceKind::unramified) j["q"] = f.q;
  j["n"] = f.n;
  if (f.v_basis) j["V_basis"] = to_json_vectors(*f.v_basis);
  j["caps"] = {{"center", f.caps.center},
               {"heisenberg", f.caps.heisenberg},
               {"real", f.caps.real},
               {"svn", f.caps.svn}};
  if (f.seed) j["seed"] = *f.seed;
  return j;
}

namespace detail {

class Reader {
public:
  std::vector<ValidationIssue> issues;

  void fail(const std::string& path, const std::string& rule) { issues.push_back({path, rule}); }

  std::optional<Int> integer(const json& v, const std::string& path) {
    if (v.is_number_integer()) {
      if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
      return Int(v.get<std::int64_t>());
    }
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
      bool ok = s.size() > start;
      for (std::size_t i = start; i < s.size() && ok; ++i) ok = s[i] >= '0' && s[i] <= '9';
      if (ok) return Int(s);
    }
    fail(path, "must be an integer");
    return std::nullopt;
  }

  std::optional<std::int64_t> small(const json& obj, const std::string& key, bool required,
                                    std::int64_t lo, std::int64_t hi) {
    if (!obj.contains(key)) {
      if (required) fail(key, "is required");
      return std::nullopt;
    }
    auto v = integer(obj[key], key);
    if (!v) return std::nullopt;
    if (*v < lo || *v > hi) {
      fail(key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      return std::nullopt;
    }
    return static_cast<std::int64_t>(*v);
  }

  /// Square matrix given as nested rows or as a flat row-major list.
  std::optional<Matrix> square(const json& obj, const std::string& key, std::size_t rank) {
    if (!obj.contains(key)) {
      fail(key, "is required");
      return std::nullopt;
    }
    const json& v = obj[key];
    if (!v.is_array()) {
      fail(key, "must be an array");
      return std::nullopt;
    }
    Matrix m(rank, rank);
    const bool nested = !v.empty() && v.front().is_array();
    if (nested) {
      if (v.size() != rank) {
        fail(key, "must have rank rows");
        return std::nullopt;
      }
      bool ok = true;
      for (std::size_t i = 0; i < rank; ++i) {
        const std::string rp = key + "/" + std::to_string(i);
        if (!v[i].is_array() || v[i].size() != rank) {
          fail(rp, "must have rank entries");
          ok = false;
          continue;
        }
        for (std::size_t c = 0; c < rank; ++c) {
          auto x = integer(v[i][c], rp + "/" + std::to_string(c));
          if (x) m(i, c) = *x;
          else ok = false;
        }
      }
      if (!ok) return std::nullopt;
      return m;
    }
    if (v.size() != rank * rank) {
      fail(key, "must have rank x rank entries");
      return std::nullopt;
    }
    bool ok = true;
    for (std::size_t i = 0; i < rank * rank; ++i) {
      auto x = integer(v[i], key + "/" + std::to_string(i));
      if (x) m(i / rank, i % rank) = *x;
      else ok = false;
    }
    if (!ok) return std::nullopt;
    return m;
  }
};

inline bool is_prime_power(std::int64_t q) { return q >= 2 && factorize(q).size() == 1; }

}  // namespace detail

/// Parses and validates an instance; every violated rule is reported with
/// the path of the offending field.
inline InstanceFile parse_instance(const json& j) {
  detail::Reader rd;
  if (!j.is_object()) throw validation_error("", "instance must be a JSON object");
  InstanceFile f;

  if (auto v = rd.small(j, "schema_version", true, 1, 1000)) {
    if (*v != kSchemaVersion) rd.fail("schema_version", "unsupported schema version");
    f.schema_version = static_cast<int>(*v);
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    rd.fail("kind", "must be \"nonarch-unramified\" or \"real\"");
  } else {
    const auto k = j["kind"].get<std::string>();
    if (k == "nonarch-unramified") f.kind = InstanceKind::unramified;
    else if (k == "real") f.kind = InstanceKind::real;
    else rd.fail("kind", "must be \"nonarch-unramified\" or \"real\"");
  }
  const auto rank = rd.small(j, "rank", true, 1, 64);
  const auto d = rd.small(j, "d", true, 1, 64);
  std::optional<std::int64_t> q;
  if (f.kind == InstanceKind::unramified) q = rd.small(j, "q", true, 2, std::int64_t{1} << 31);
  else if (j.contains("q")) rd.fail("q", "must be absent for real instances");
  const auto n = rd.small(j, "n", true, 1, std::int64_t{1} << 31);
  if (j.contains("seed")) {
    if (auto s = rd.small(j, "seed", false, 0, std::numeric_limits<std::int64_t>::max()))
      f.seed = static_cast<std::uint64_t>(*s);
  }
  if (j.contains("caps")) {
    const json& c = j["caps"];
    if (!c.is_object()) {
      rd.fail("caps", "must be an object");
    } else {
      const auto cap = [&](const char* key, std::int64_t& out) {
        if (!c.contains(key)) return;
        auto v = rd.integer(c[key], std::string("caps/") + key);
        if (!v) return;
        if (*v < 1 || !fits_int64(*v)) rd.fail(std::string("caps/") + key, "must be a positive 64-bit integer");
        else out = static_cast<std::int64_t>(*v);
      };
      cap("center", f.caps.center);
      cap("heisenberg", f.caps.heisenberg);
      cap("real", f.caps.real);
      cap("svn", f.caps.svn);
      for (const auto& [key, value] : c.items())
        if (key != "center" && key != "heisenberg" && key != "real" && key != "svn")
          rd.fail("caps/" + key, "unknown cap");
    }
  }
  static const char* known[] = {"schema_version", "kind", "rank",     "d",    "gamma", "Q_upper",
                                "q",              "n",    "V_basis",  "caps", "seed"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) rd.fail(key, "unknown field");
  }
  if (!rank || !d || !n || (f.kind == InstanceKind::unramified && !q) || !rd.issues.empty())
    throw validation_error(rd.issues);

  f.rank = static_cast<std::size_t>(*rank);
  f.d = static_cast<std::uint64_t>(*d);
  f.n = *n;
  if (q) f.q = *q;

  auto gamma = rd.square(j, "gamma", f.rank);
  auto upper = rd.square(j, "Q_upper", f.rank);
  if (gamma) {
    f.gamma = *gamma;
    if (!(gamma->pow(f.d) == Matrix::identity(f.rank))) rd.fail("gamma", "gamma^d must equal the identity");
    const Int det = determinant(*gamma);
    if (det != 1 && det != -1) rd.fail("gamma", "determinant must be +1 or -1");
  }
  if (upper) {
    f.q_upper = *upper;
    bool triangular = true;
    for (std::size_t r = 0; r < f.rank; ++r)
      for (std::size_t c = 0; c < r; ++c) triangular = triangular && (*upper)(r, c) == 0;
    if (!triangular) rd.fail("Q_upper", "must be upper triangular");
    else if (gamma && rd.issues.empty() &&
             !check_gamma_invariance(GammaLattice(*gamma, f.d), QuadraticForm(*upper)))
      rd.fail("Q_upper", "quadratic form must be gamma-invariant");
  }
  if (f.kind == InstanceKind::unramified) {
    if (!detail::is_prime_power(f.q)) rd.fail("q", "must be a prime power");
    else if ((f.q - 1) % f.n != 0) rd.fail("n", "must divide q - 1");
  } else {
    if (f.n != 2) rd.fail("n", "must equal 2 for real instances");
    if (f.d != 1 && f.d != 2) rd.fail("d", "must be 1 or 2 for real instances");
  }
  if (j.contains("V_basis")) {
    const json& v = j["V_basis"];
    if (f.kind != InstanceKind::unramified) {
      rd.fail("V_basis", "only supported for nonarch-unramified instances");
    } else if (!v.is_array()) {
      rd.fail("V_basis", "must be an array of vectors");
    } else {
      std::vector<Vector> vs;
      bool ok = true;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = "V_basis/" + std::to_string(i);
        if (!v[i].is_array() || v[i].size() != f.rank) {
          rd.fail(p, "must be a vector of length rank");
          ok = false;
          continue;
        }
        Vector x;
        for (std::size_t c = 0; c < f.rank; ++c) {
          auto e = rd.integer(v[i][c], p + "/" + std::to_string(c));
          if (e) x.push_back(*e);
          else ok = false;
        }
        vs.push_back(std::move(x));
      }
      if (ok) f.v_basis = std::move(vs);
    }
  }
  if (!rd.issues.empty()) throw validation_error(rd.issues);

  if (f.v_basis) {
    const UnramifiedInstance inst(f.lattice(), f.form(), f.q, f.n);
    const Sublattice target = inst.sharp_fixed();
    const Sublattice v = Sublattice::from_vectors(f.rank, *f.v_basis);
    if (!target.contains(v)) rd.fail("V_basis", "must lie in the gamma-fixed part of Y^#");
    else if (v.rank() != target.rank()) rd.fail("V_basis", "must have finite index in the gamma-fixed part of Y^#");
  }
  if (!rd.issues.empty()) throw validation_error(rd.issues);
  return f;
}

}  // namespace metator
