#include "conedens/setgen.hpp"

#include <cctype>
#include <fstream>
#include <random>

#include "conedens/errors.hpp"
#include "conedens/order.hpp"

namespace conedens {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  out = std::stoll(s);
  return true;
}

PointSet build_1d_named(const std::string& name, const Box& box, std::size_t pos) {
  const int n_max = box.bounds()[0];
  PointSet s(box);
  if (name == "odds") {
    for (int v = 1; v <= n_max; v += 2) s.insert({v});
  } else if (name == "evens") {
    for (int v = 2; v <= n_max; v += 2) s.insert({v});
  } else if (name == "primes") {
    // Eratosthenes
    std::vector<bool> composite(static_cast<std::size_t>(n_max) + 1, false);
    for (int p = 2; p <= n_max; ++p) {
      if (composite[static_cast<std::size_t>(p)]) continue;
      s.insert({p});
      for (long long q = static_cast<long long>(p) * p; q <= n_max; q += p)
        composite[static_cast<std::size_t>(q)] = true;
    }
  } else if (name == "squares") {
    for (long long v = 1; v * v <= n_max; ++v) s.insert({static_cast<int>(v * v)});
  } else {
    throw ParseError("unknown 1D set name '" + name + "'", pos);
  }
  return s;
}

PointSet build_powers(const Box& box, const std::string& arg, std::size_t pos) {
  long long k;
  if (!parse_int(arg, k) || k < 1) throw ParseError("powers: bad exponent '" + arg + "'", pos);
  const int n_max = box.bounds()[0];
  PointSet s(box);
  for (long long v = 1;; ++v) {
    long long pw = 1;
    bool over = false;
    for (long long i = 0; i < k; ++i) {
      pw *= v;
      if (pw > n_max) {
        over = true;
        break;
      }
    }
    if (over) break;
    s.insert({static_cast<int>(pw)});
    if (v >= n_max) break;  // k == 1
  }
  return s;
}

// "p=P[,atoms=yes]"
void parse_random_args(const std::string& args, std::size_t pos, Rational& p,
                       bool& atoms_flag) {
  atoms_flag = false;
  bool have_p = false;
  for (const std::string& part : split(args, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("random: expected key=value", pos);
    const std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    if (key == "p") {
      try {
        p = parse_fraction(val);
      } catch (const std::exception&) {
        throw ParseError("random: bad probability '" + val + "'", pos);
      }
      have_p = true;
    } else if (key == "atoms") {
      if (val != "yes" && val != "no")
        throw ParseError("random: atoms must be yes or no", pos);
      atoms_flag = val == "yes";
    } else {
      throw ParseError("random: unknown key '" + key + "'", pos);
    }
  }
  if (!have_p) throw ParseError("random: missing p=", pos);
  if (p < 0 || p > 1) throw ParseError("random: p outside [0,1]", pos);
}

PointSet build_list_1d(const Box& box, const std::string& args, std::size_t pos) {
  PointSet s(box);
  for (const std::string& tok : split(args, ',')) {
    long long v;
    if (!parse_int(tok, v)) throw ParseError("list: bad integer '" + tok + "'", pos);
    Point p{static_cast<int>(v)};
    if (!box.cone_contains(p))
      throw ParseError("list: point " + point_str(p) + " outside boxed cone", pos);
    s.insert(p);
  }
  return s;
}

PointSet build_list_nd(const Box& box, const std::string& args, std::size_t pos) {
  PointSet s(box);
  std::size_t i = 0;
  while (i < args.size()) {
    if (args[i] != '(') throw ParseError("list: expected '('", pos + i);
    const auto close = args.find(')', i);
    if (close == std::string::npos) throw ParseError("list: missing ')'", pos + i);
    Point p;
    for (const std::string& tok : split(args.substr(i + 1, close - i - 1), ',')) {
      long long v;
      if (!parse_int(tok, v)) throw ParseError("list: bad coordinate '" + tok + "'", pos + i);
      p.push_back(static_cast<int>(v));
    }
    if (!box.cone_contains(p))
      throw ParseError("list: point " + point_str(p) + " outside boxed cone", pos + i);
    s.insert(p);
    i = close + 1;
  }
  return s;
}

PointSet build_file(const Box& box, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open set file: " + path);
  PointSet s(box);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Point p;
    for (const std::string& tok : split(line, ',')) {
      long long v;
      if (!parse_int(tok, v))
        throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                    ": bad coordinate '" + tok + "'");
      p.push_back(static_cast<int>(v));
    }
    if (!box.cone_contains(p))
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": point " +
                                  point_str(p) + " outside boxed cone");
    s.insert(p);
  }
  return s;
}

// prod(S1;...;Sn): coordinatewise product of 1D sets
PointSet build_prod(const Box& box, const std::string& args, std::uint64_t seed,
                    std::size_t pos) {
  const std::vector<std::string> parts = split(args, ';');
  if (static_cast<int>(parts.size()) != box.dim())
    throw ParseError("prod: expected " + std::to_string(box.dim()) +
                         " factors, got " + std::to_string(parts.size()),
                     pos);
  std::vector<std::vector<std::uint64_t>> factors;
  for (int i = 0; i < box.dim(); ++i) {
    const Box line = Box::line(box.bounds()[static_cast<std::size_t>(i)]);
    // per-factor seed, so prod(random:...;random:...) is not coordinate-correlated
    factors.push_back(parse_and_build(parts[static_cast<std::size_t>(i)], line,
                                      derive_seed(seed, static_cast<std::uint64_t>(i)))
                          .indices());
  }
  PointSet s(box);
  Point p(static_cast<std::size_t>(box.dim()));
  std::vector<std::size_t> pick(static_cast<std::size_t>(box.dim()), 0);
  for (const auto& f : factors)
    if (f.empty()) return s;  // empty factor, empty product
  for (;;) {
    for (int i = 0; i < box.dim(); ++i)
      p[static_cast<std::size_t>(i)] =
          static_cast<int>(factors[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
    s.insert(p);
    int i = box.dim() - 1;
    for (; i >= 0; --i) {
      auto& c = pick[static_cast<std::size_t>(i)];
      if (c + 1 < factors[static_cast<std::size_t>(i)].size()) {
        ++c;
        break;
      }
      c = 0;
    }
    if (i < 0) break;
  }
  return s;
}

}  // namespace

PointSet random_pointset(const Box& box, const Rational& p, std::uint64_t seed,
                         bool force_atoms) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability outside [0,1]");
  PointSet s(box);
  std::mt19937_64 rng(seed);
  if (p == 1) {
    s = PointSet::full(box);
  } else {
    // accept iff the next draw is below floor(p * 2^64); portable because the
    // raw mt19937_64 sequence is fully specified by the standard
    const BigInt threshold_big = (numerator(p) << 64) / denominator(p);
    const std::uint64_t threshold = threshold_big.convert_to<std::uint64_t>();
    for (std::uint64_t idx = 1; idx < box.volume(); ++idx)
      if (rng() < threshold) s.insert_index(idx);
  }
  if (force_atoms)
    for (const Point& e : atoms(box.dim())) s.insert(e);
  return s;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t instance) {
  // splitmix64 step over base + instance
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (instance + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

PointSet parse_and_build(const std::string& spec, const Box& box,
                         std::uint64_t seed) {
  if (spec.empty()) throw ParseError("empty set spec", 0);

  if (spec == "full") return PointSet::full(box);

  // random:p=... and random(p=...)
  if (spec.rfind("random:", 0) == 0 || spec.rfind("random(", 0) == 0) {
    std::string args;
    if (spec[6] == ':') {
      args = spec.substr(7);
    } else {
      if (spec.back() != ')') throw ParseError("random: missing ')'", spec.size() - 1);
      args = spec.substr(7, spec.size() - 8);
    }
    Rational p;
    bool atoms_flag;
    parse_random_args(args, 7, p, atoms_flag);
    return random_pointset(box, p, seed, atoms_flag);
  }

  if (spec.rfind("prod(", 0) == 0) {
    if (box.dim() < 2) throw ParseError("prod requires dimension >= 2", 0);
    if (spec.back() != ')') throw ParseError("prod: missing ')'", spec.size() - 1);
    return build_prod(box, spec.substr(5, spec.size() - 6), seed, 5);
  }

  if (spec.rfind("list:", 0) == 0) {
    return box.dim() == 1 ? build_list_1d(box, spec.substr(5), 5)
                          : build_list_nd(box, spec.substr(5), 5);
  }

  if (spec.rfind("file:", 0) == 0) return build_file(box, spec.substr(5));

  if (spec.rfind("powers:", 0) == 0) {
    if (box.dim() != 1) throw ParseError("powers is a 1D generator", 0);
    return build_powers(box, spec.substr(7), 7);
  }

  if (box.dim() != 1)
    throw ParseError("set name '" + spec + "' is only valid in dimension 1", 0);
  return build_1d_named(spec, box, 0);
}

}  // namespace conedens
