#include "modcartan/groups/group.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "modcartan/error.hpp"

namespace modcartan::grp {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void check_table(const CayleyTable& t) {
  const std::size_t n = t.size();
  if (n == 0) throw NotAGroup("nonempty", "empty table");
  if (n > kMaxOrder)
    throw OrderLimitExceeded("group order " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxOrder));
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) throw NotAGroup("square table", "row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] >= n)
        throw NotAGroup("closure", "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  for (Elem i = 0; i < n; ++i) {
    if (t[0][i] != i || t[i][0] != i)
      throw NotAGroup("identity at index 0", "element " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (row_seen[t[i][j]]++)
        throw NotAGroup("Latin square", "row " + std::to_string(i) + " repeats " +
                                            std::to_string(t[i][j]));
      if (col_seen[t[j][i]]++)
        throw NotAGroup("Latin square", "column " + std::to_string(i) + " repeats " +
                                            std::to_string(t[j][i]));
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = t[a][b];
      for (Elem c = 0; c < n; ++c)
        if (t[ab][c] != t[a][t[b][c]]) throw NotAGroup("associativity", triple(a, b, c));
    }
}

std::vector<char> closure_flags(const CayleyTable& t, const std::vector<Elem>& gens) {
  std::vector<char> in(t.size(), 0);
  std::deque<Elem> queue{0};
  in[0] = 1;
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (Elem s : gens) {
      const Elem y = t[x][s];
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return in;
}

}  // namespace

Group Group::from_table(CayleyTable table, std::vector<std::string> names, std::string label) {
  check_table(table);
  const std::size_t n = table.size();
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  } else if (names.size() != n) {
    throw InvalidArgument("element name count does not match the group order");
  }

  Group g;
  g.table_ = std::move(table);
  g.names_ = std::move(names);
  g.label_ = label.empty() ? "table(" + std::to_string(n) + ")" : std::move(label);

  g.inverse_.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (g.table_[a][b] == 0) g.inverse_[a] = b;

  g.orders_.assign(n, 1);
  for (Elem a = 0; a < n; ++a) {
    Elem x = a;
    while (x != 0) {
      x = g.table_[x][a];
      ++g.orders_[a];
    }
  }

  std::vector<char> generated(n, 0);
  generated[0] = 1;
  for (Elem x = 0; x < n; ++x) {
    if (generated[x]) continue;
    g.generators_.push_back(x);
    generated = closure_flags(g.table_, g.generators_);
  }

  g.words_.assign(n, {});
  g.parent_.assign(n, 0);
  g.parent_gen_.assign(n, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  g.bfs_order_.push_back(0);
  for (std::size_t head = 0; head < g.bfs_order_.size(); ++head) {
    const Elem x = g.bfs_order_[head];
    for (std::uint32_t i = 0; i < g.generators_.size(); ++i) {
      const Elem y = g.table_[x][g.generators_[i]];
      if (seen[y]) continue;
      seen[y] = 1;
      g.parent_[y] = x;
      g.parent_gen_[y] = i;
      g.words_[y] = g.words_[x];
      g.words_[y].push_back(i);
      g.bfs_order_.push_back(y);
    }
  }
  return g;
}

Elem Group::evaluate(const Word& w) const {
  Elem x = 0;
  for (auto i : w) x = mul(x, generators_.at(i));
  return x;
}

bool Group::is_abelian() const noexcept {
  for (Elem a : generators_)
    for (Elem b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Group::is_cyclic() const noexcept {
  return std::any_of(orders_.begin(), orders_.end(),
                     [n = order()](std::uint32_t o) { return o == n; });
}

std::vector<std::vector<Elem>> Group::conjugacy_classes() const {
  const std::size_t n = order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<Elem> cls;
    for (Elem g = 0; g < n; ++g) {
      const Elem y = conj(g, x);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

GroupPtr validate_cayley(const CayleyTable& table, std::vector<std::string> names) {
  return std::make_shared<const Group>(Group::from_table(table, std::move(names)));
}

GroupPtr direct_product(const Group& a, const Group& b) {
  const std::size_t na = a.order(), nb = b.order();
  if (na * nb > kMaxOrder)
    throw OrderLimitExceeded("direct product of order " + std::to_string(na * nb) +
                             " exceeds " + std::to_string(kMaxOrder));
  CayleyTable t(na * nb, std::vector<Elem>(na * nb));
  std::vector<std::string> names(na * nb);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) {
      const Elem i = static_cast<Elem>(x * nb + y);
      names[i] = i == 0 ? "1" : "(" + a.name(x) + "," + b.name(y) + ")";
      for (Elem u = 0; u < na; ++u)
        for (Elem v = 0; v < nb; ++v)
          t[i][u * nb + v] = static_cast<Elem>(a.mul(x, u) * nb + b.mul(y, v));
    }
  return std::make_shared<const Group>(
      Group::from_table(std::move(t), std::move(names), a.label() + "x" + b.label()));
}

}  // namespace modcartan::grp
