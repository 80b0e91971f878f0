#include "sgb/group.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "sgb/config.hpp"
#include "sgb/error.hpp"

namespace sgb {
namespace {

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw Error(ErrorKind::kInvalidParameter, std::string(what) + " requires n >= 1");
}

void require_table_size(std::size_t n) {
  if (n > kMaxTableOrder) {
    throw Error(ErrorKind::kResourceLimit, "order " + std::to_string(n) +
                                              " exceeds the table limit of " +
                                              std::to_string(kMaxTableOrder));
  }
}

std::string describe(const std::vector<Element>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

}  // namespace

const char* to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::kCyclic: return "cyclic";
    case GroupFamily::kDihedral: return "dihedral";
    case GroupFamily::kDicyclic: return "dicyclic";
    case GroupFamily::kProduct: return "product";
    case GroupFamily::kTable: return "table";
  }
  return "unknown";
}

FiniteGroup FiniteGroup::from_rule(std::size_t n, GroupDescriptor descriptor, const Rule& rule,
                                   BuildOptions options) {
  require_table_size(n);
  FiniteGroup g;
  g.order_ = n;
  g.descriptor_ = std::move(descriptor);
  g.table_.resize(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) g.table_[a * n + b] = rule(a, b);
  }
  if (options.validate) g.validate();
  g.derive_identity_and_inverses();
  return g;
}

void FiniteGroup::derive_identity_and_inverses() {
  const std::size_t n = order_;
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    found = true;
    for (Element x = 0; x < n; ++x) {
      if (mul(e, x) != x || mul(x, e) != x) {
        found = false;
        break;
      }
    }
    if (found) identity_ = e;
  }
  if (!found) throw NotAGroupError(NotAGroupError::Reason::kIdentity, {}, "no identity element");

  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    auto r = row(a);
    for (Element b = 0; b < n; ++b) {
      if (r[b] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

void FiniteGroup::validate() const {
  using Reason = NotAGroupError::Reason;
  const std::size_t n = order_;

  std::vector<std::uint8_t> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      Element c = mul(a, b);
      if (c >= n || seen[c]) {
        throw NotAGroupError(Reason::kLatinSquare, {a},
                             "row " + std::to_string(a) + " is not a permutation");
      }
      seen[c] = 1;
    }
  }
  for (Element b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element a = 0; a < n; ++a) {
      Element c = mul(a, b);
      if (seen[c]) {
        throw NotAGroupError(Reason::kLatinSquare, {b},
                             "column " + std::to_string(b) + " is not a permutation");
      }
      seen[c] = 1;
    }
  }

  Element e = 0;
  bool found = false;
  for (Element cand = 0; cand < n && !found; ++cand) {
    found = true;
    for (Element x = 0; x < n; ++x) {
      if (mul(cand, x) != x || mul(x, cand) != x) {
        found = false;
        break;
      }
    }
    if (found) e = cand;
  }
  if (!found) throw NotAGroupError(Reason::kIdentity, {}, "no two-sided identity element");

  for (Element a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (Element b = 0; b < n; ++b) {
      if (mul(a, b) == e && mul(b, a) == e) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      throw NotAGroupError(Reason::kInverse, {a},
                           "element " + std::to_string(a) + " has no two-sided inverse");
    }
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          std::vector<Element> w{a, b, c};
          throw NotAGroupError(Reason::kAssociativity, w,
                               "associativity fails at " + describe(w));
        }
      }
    }
  }
}

FiniteGroup make_cyclic(std::size_t n, BuildOptions options) {
  require_positive(n, "make_cyclic");
  GroupDescriptor d{GroupFamily::kCyclic, {n}, "Z" + std::to_string(n)};
  return FiniteGroup::from_rule(
      n, std::move(d),
      [n](Element a, Element b) { return static_cast<Element>((a + b) % n); }, options);
}

FiniteGroup make_dihedral(std::size_t n, BuildOptions options) {
  require_positive(n, "make_dihedral");
  GroupDescriptor d{GroupFamily::kDihedral, {n}, "D" + std::to_string(2 * n)};
  // a^i b^s * a^j b^t = a^(i + (-1)^s j) b^(s+t)
  auto rule = [n](Element x, Element y) {
    const std::size_t i = x % n, s = x / n, j = y % n, t = y / n;
    const std::size_t k = s == 0 ? (i + j) % n : (i + n - j) % n;
    return static_cast<Element>(k + n * (s ^ t));
  };
  return FiniteGroup::from_rule(2 * n, std::move(d), rule, options);
}

FiniteGroup make_dicyclic(std::size_t n, BuildOptions options) {
  require_positive(n, "make_dicyclic");
  GroupDescriptor d{GroupFamily::kDicyclic, {n}, "Q" + std::to_string(4 * n)};
  const std::size_t m = 2 * n;
  // a^i b^s * a^j b^t = a^(i + (-1)^s j) b^(s+t), and b^2 = a^n.
  auto rule = [n, m](Element x, Element y) {
    const std::size_t i = x % m, s = x / m, j = y % m, t = y / m;
    std::size_t k = s == 0 ? (i + j) % m : (i + m - j) % m;
    std::size_t u = s + t;
    if (u == 2) {
      k = (k + n) % m;
      u = 0;
    }
    return static_cast<Element>(k + m * u);
  };
  return FiniteGroup::from_rule(4 * n, std::move(d), rule, options);
}

FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h, BuildOptions options) {
  const std::size_t hn = h.order();
  const std::size_t n = g.order() * hn;
  require_table_size(n);
  // params list the orders of the flattened factors.
  GroupDescriptor d{GroupFamily::kProduct, {}, g.descriptor().name + "x" + h.descriptor().name};
  for (const FiniteGroup* part : {&g, &h}) {
    const auto& pd = part->descriptor();
    if (pd.family == GroupFamily::kProduct) {
      d.params.insert(d.params.end(), pd.params.begin(), pd.params.end());
    } else {
      d.params.push_back(part->order());
    }
  }
  auto rule = [&g, &h, hn](Element x, Element y) {
    const Element gi = g.mul(static_cast<Element>(x / hn), static_cast<Element>(y / hn));
    const Element hj = h.mul(static_cast<Element>(x % hn), static_cast<Element>(y % hn));
    return static_cast<Element>(gi * hn + hj);
  };
  return FiniteGroup::from_rule(n, std::move(d), rule, options);
}

FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "empty Cayley table");
  require_table_size(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorKind::kInvalidInput, "row " + std::to_string(i) + " has " +
                                                std::to_string(table[i].size()) +
                                                " entries, expected " + std::to_string(n));
    }
    for (Element v : table[i]) {
      if (v >= n) {
        throw Error(ErrorKind::kInvalidInput,
                    "entry " + std::to_string(v) + " in row " + std::to_string(i) +
                        " is out of range");
      }
    }
  }
  if (name.empty()) name = "table" + std::to_string(n);
  GroupDescriptor d{GroupFamily::kTable, {n}, std::move(name)};
  return FiniteGroup::from_rule(
      n, std::move(d), [&table](Element a, Element b) { return table[a][b]; },
      BuildOptions{.validate = true});
}

std::vector<std::vector<Element>> parse_cayley_table(std::istream& in) {
  std::string line;
  std::ostringstream body;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    body << line << '\n';
  }
  std::istringstream tokens(body.str());
  long long n = 0;
  if (!(tokens >> n) || n <= 0) {
    throw Error(ErrorKind::kInvalidInput, "Cayley table must start with a positive order");
  }
  if (static_cast<unsigned long long>(n) > kMaxTableOrder) {
    throw Error(ErrorKind::kResourceLimit, "table order " + std::to_string(n) + " too large");
  }
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      long long v = 0;
      if (!(tokens >> v)) {
        throw Error(ErrorKind::kInvalidInput, "Cayley table truncated at row " +
                                                  std::to_string(i) + ", column " +
                                                  std::to_string(j));
      }
      if (v < 0 || v >= n) {
        throw Error(ErrorKind::kInvalidInput, "entry " + std::to_string(v) + " at row " +
                                                  std::to_string(i) + " is out of range");
      }
      table[i][j] = static_cast<Element>(v);
    }
  }
  std::string extra;
  if (tokens >> extra) throw Error(ErrorKind::kInvalidInput, "trailing data after Cayley table");
  return table;
}

FiniteGroup read_cayley_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot read Cayley table '" + path.string() + "'");
  return from_cayley_table(parse_cayley_table(in), "table:" + path.filename().string());
}

std::size_t element_order(const FiniteGroup& g, Element x) {
  if (x >= g.order()) {
    throw Error(ErrorKind::kInvalidElement,
                "element " + std::to_string(x) + " not in a group of order " +
                    std::to_string(g.order()));
  }
  std::size_t k = 1;
  for (Element power = x; power != g.identity(); power = g.mul(power, x)) ++k;
  return k;
}

}  // namespace sgb
