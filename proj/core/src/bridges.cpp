#include "cardzk/bridges.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include "cardzk/shuffle.hpp"
#include "cardzk/spanning.hpp"
#include "cardzk/subprotocols.hpp"

namespace cardzk {

namespace {

constexpr int kSolverIslandCap = 16;

using Cell = std::pair<int, int>;

std::string cell_suffix(int r, int c) {
  return std::to_string(r) + "." + std::to_string(c);
}

std::string lip_tag(bool horizontal, int r, int c) {
  return (horizontal ? "lip.h" : "lip.v") + cell_suffix(r, c);
}

// Cells a bridge passes through, endpoints excluded.
std::vector<Cell> bridge_interior(const Bridge& b) {
  std::vector<Cell> cells;
  if (b.r1 == b.r2)
    for (int c = b.c1 + 1; c < b.c2; ++c) cells.emplace_back(b.r1, c);
  else
    for (int r = b.r1 + 1; r < b.r2; ++r) cells.emplace_back(r, b.c1);
  return cells;
}

}  // namespace

// --- instance & solution text ---------------------------------------------

BridgesInstance BridgesInstance::parse(const std::string& text) {
  BridgesInstance inst;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    inst.grid.push_back(line);
  }
  while (!inst.grid.empty() && inst.grid.back().empty()) inst.grid.pop_back();
  if (inst.grid.empty()) throw ParseError("bridges grid: no rows");
  inst.rows = static_cast<int>(inst.grid.size());
  inst.cols = static_cast<int>(inst.grid.front().size());
  if (inst.cols == 0) throw ParseError("bridges grid: empty row");
  for (const std::string& row : inst.grid) {
    if (static_cast<int>(row.size()) != inst.cols)
      throw ParseError("bridges grid: rows must have equal length");
    for (char ch : row)
      if (ch != '.' && (ch < '1' || ch > '8'))
        throw ParseError("bridges grid: cells are '.' or an island number 1..8");
  }
  return inst;
}

std::string BridgesInstance::to_text() const {
  std::string out;
  for (const std::string& row : grid) {
    out += row;
    out += '\n';
  }
  return out;
}

bool BridgesInstance::is_island(int r, int c) const {
  return in_grid(r, c) && grid[static_cast<size_t>(r)][static_cast<size_t>(c)] != '.';
}

int BridgesInstance::island_number(int r, int c) const {
  if (!is_island(r, c)) return 0;
  return grid[static_cast<size_t>(r)][static_cast<size_t>(c)] - '0';
}

std::vector<Cell> BridgesInstance::islands() const {
  std::vector<Cell> out;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (is_island(r, c)) out.emplace_back(r, c);
  return out;
}

BridgesSolution BridgesSolution::parse(const std::string& text) {
  BridgesSolution sol;
  std::set<std::pair<Cell, Cell>> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    Bridge b;
    if (!(fields >> b.r1 >> b.c1 >> b.r2 >> b.c2 >> b.multiplicity))
      throw ParseError("bridges solution line " + std::to_string(lineno) +
                       ": want \"r1 c1 r2 c2 mult\"");
    std::string rest;
    if (fields >> rest)
      throw ParseError("bridges solution line " + std::to_string(lineno) + ": trailing data");
    --b.r1;
    --b.c1;
    --b.r2;
    --b.c2;
    if (b.r1 < 0 || b.c1 < 0 || b.r2 < 0 || b.c2 < 0)
      throw ParseError("bridges solution line " + std::to_string(lineno) +
                       ": coordinates are 1-based");
    if (b.multiplicity == 0) continue;
    if (b.multiplicity < 0 || b.multiplicity > 2)
      throw ParseError("bridges solution line " + std::to_string(lineno) +
                       ": multiplicity must be 0..2");
    if (std::make_pair(b.r1, b.c1) > std::make_pair(b.r2, b.c2)) {
      std::swap(b.r1, b.r2);
      std::swap(b.c1, b.c2);
    }
    if (b.r1 == b.r2 && b.c1 == b.c2)
      throw ParseError("bridges solution line " + std::to_string(lineno) +
                       ": endpoints coincide");
    if (b.r1 != b.r2 && b.c1 != b.c2)
      throw ParseError("bridges solution line " + std::to_string(lineno) +
                       ": bridges run straight");
    if (!seen.insert({{b.r1, b.c1}, {b.r2, b.c2}}).second)
      throw ParseError("bridges solution line " + std::to_string(lineno) + ": duplicate pair");
    sol.bridges.push_back(b);
  }
  return sol;
}

std::string BridgesSolution::to_text() const {
  std::string out;
  for (const Bridge& b : bridges) {
    out += std::to_string(b.r1 + 1) + " " + std::to_string(b.c1 + 1) + " " +
           std::to_string(b.r2 + 1) + " " + std::to_string(b.c2 + 1) + " " +
           std::to_string(b.multiplicity) + "\n";
  }
  return out;
}

// --- oracles ----------------------------------------------------------------

LipValues lip_values(const BridgesInstance& inst, const BridgesSolution& sol) {
  LipValues lv;
  lv.horizontal.assign(static_cast<size_t>(inst.rows) + 1,
                       std::vector<int>(static_cast<size_t>(inst.cols), 0));
  lv.vertical.assign(static_cast<size_t>(inst.rows),
                     std::vector<int>(static_cast<size_t>(inst.cols) + 1, 0));
  for (const Bridge& b : sol.bridges) {
    if (!inst.in_grid(b.r1, b.c1) || !inst.in_grid(b.r2, b.c2))
      throw ProtocolMisuse("bridges: endpoint outside the grid");
    if ((b.r1 == b.r2) == (b.c1 == b.c2))
      throw ProtocolMisuse("bridges: bridges join two distinct colinear cells");
    if (std::make_pair(b.r1, b.c1) > std::make_pair(b.r2, b.c2))
      throw ProtocolMisuse("bridges: endpoints out of order");
    if (b.multiplicity < 1 || b.multiplicity > 2)
      throw ProtocolMisuse("bridges: multiplicity must be 1 or 2");
    if (b.r1 == b.r2)
      for (int c = b.c1 + 1; c <= b.c2; ++c)
        lv.vertical[static_cast<size_t>(b.r1)][static_cast<size_t>(c)] += b.multiplicity;
    else
      for (int r = b.r1 + 1; r <= b.r2; ++r)
        lv.horizontal[static_cast<size_t>(r)][static_cast<size_t>(b.c1)] += b.multiplicity;
  }
  return lv;
}

bool solution_valid(const BridgesInstance& inst, const BridgesSolution& sol) {
  std::set<std::pair<Cell, Cell>> seen;
  std::vector<std::vector<char>> passage(static_cast<size_t>(inst.rows),
                                         std::vector<char>(static_cast<size_t>(inst.cols), 0));
  std::vector<std::vector<int>> sum(static_cast<size_t>(inst.rows),
                                    std::vector<int>(static_cast<size_t>(inst.cols), 0));
  for (Bridge b : sol.bridges) {
    if (std::make_pair(b.r1, b.c1) > std::make_pair(b.r2, b.c2)) {
      std::swap(b.r1, b.r2);
      std::swap(b.c1, b.c2);
    }
    if (!inst.in_grid(b.r1, b.c1) || !inst.in_grid(b.r2, b.c2)) return false;
    if ((b.r1 == b.r2) == (b.c1 == b.c2)) return false;
    if (b.multiplicity < 1 || b.multiplicity > 2) return false;
    if (!inst.is_island(b.r1, b.c1) || !inst.is_island(b.r2, b.c2)) return false;
    if (!seen.insert({{b.r1, b.c1}, {b.r2, b.c2}}).second) return false;
    char kind = b.r1 == b.r2 ? 'h' : 'v';
    for (const Cell& cell : bridge_interior(b)) {
      if (inst.is_island(cell.first, cell.second)) return false;
      char& slot = passage[static_cast<size_t>(cell.first)][static_cast<size_t>(cell.second)];
      if (slot != 0) return false;  // crossing or overlap
      slot = kind;
    }
    sum[static_cast<size_t>(b.r1)][static_cast<size_t>(b.c1)] += b.multiplicity;
    sum[static_cast<size_t>(b.r2)][static_cast<size_t>(b.c2)] += b.multiplicity;
  }

  std::vector<Cell> isl = inst.islands();
  for (const Cell& cell : isl)
    if (sum[static_cast<size_t>(cell.first)][static_cast<size_t>(cell.second)] !=
        inst.island_number(cell.first, cell.second))
      return false;

  if (isl.size() <= 1) return true;
  std::vector<int> parent(isl.size());
  for (size_t i = 0; i < isl.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto id_of = [&](int r, int c) {
    return static_cast<int>(std::lower_bound(isl.begin(), isl.end(), Cell{r, c}) - isl.begin());
  };
  for (const Bridge& b : sol.bridges)
    parent[static_cast<size_t>(find(id_of(b.r1, b.c1)))] = find(id_of(b.r2, b.c2));
  int root = find(0);
  for (size_t i = 1; i < isl.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

Graph island_graph(const BridgesInstance& inst) {
  std::vector<Cell> isl = inst.islands();
  auto id_of = [&](int r, int c) {
    return static_cast<int>(std::lower_bound(isl.begin(), isl.end(), Cell{r, c}) - isl.begin()) +
           1;
  };
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < isl.size(); ++i) {
    auto [r, c] = isl[i];
    for (int cc = c + 1; cc < inst.cols; ++cc) {
      if (!inst.is_island(r, cc)) continue;
      edges.emplace_back(static_cast<int>(i) + 1, id_of(r, cc));
      break;
    }
    for (int rr = r + 1; rr < inst.rows; ++rr) {
      if (!inst.is_island(rr, c)) continue;
      edges.emplace_back(static_cast<int>(i) + 1, id_of(rr, c));
      break;
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(static_cast<int>(isl.size()), std::move(edges));
}

std::optional<BridgesSolution> solve_bridges(const BridgesInstance& inst) {
  std::vector<Cell> isl = inst.islands();
  if (static_cast<int>(isl.size()) > kSolverIslandCap)
    throw CapacityError("solve_bridges: more than " + std::to_string(kSolverIslandCap) +
                        " islands");
  if (isl.empty()) return BridgesSolution{};

  Graph g = island_graph(inst);
  int ec = g.edge_count();
  int ic = static_cast<int>(isl.size());

  std::vector<int> target(static_cast<size_t>(ic) + 1, 0);
  for (int i = 1; i <= ic; ++i)
    target[static_cast<size_t>(i)] =
        inst.island_number(isl[static_cast<size_t>(i - 1)].first,
                           isl[static_cast<size_t>(i - 1)].second);

  auto edge_bridge = [&](int e, int mult) {
    auto [u, v] = g.edge(e);
    Bridge b;
    b.r1 = isl[static_cast<size_t>(u - 1)].first;
    b.c1 = isl[static_cast<size_t>(u - 1)].second;
    b.r2 = isl[static_cast<size_t>(v - 1)].first;
    b.c2 = isl[static_cast<size_t>(v - 1)].second;
    b.multiplicity = mult;
    return b;
  };

  // Edge pairs that would cross if both carried a bridge.
  std::vector<std::vector<int>> conflicts(static_cast<size_t>(ec));
  {
    std::vector<std::set<Cell>> interior(static_cast<size_t>(ec));
    for (int e = 0; e < ec; ++e) {
      std::vector<Cell> cells = bridge_interior(edge_bridge(e, 1));
      interior[static_cast<size_t>(e)].insert(cells.begin(), cells.end());
    }
    for (int a = 0; a < ec; ++a)
      for (int b = a + 1; b < ec; ++b) {
        bool clash = false;
        for (const Cell& cell : interior[static_cast<size_t>(a)])
          if (interior[static_cast<size_t>(b)].count(cell)) clash = true;
        if (clash) {
          conflicts[static_cast<size_t>(a)].push_back(b);
          conflicts[static_cast<size_t>(b)].push_back(a);
        }
      }
  }

  std::vector<int> unassigned(static_cast<size_t>(ic) + 1, 0);
  for (int e = 0; e < ec; ++e) {
    unassigned[static_cast<size_t>(g.edge(e).first)] += 1;
    unassigned[static_cast<size_t>(g.edge(e).second)] += 1;
  }
  std::vector<int> deg(static_cast<size_t>(ic) + 1, 0);
  std::vector<int> mult(static_cast<size_t>(ec), 0);

  std::function<bool(int)> assign = [&](int e) -> bool {
    if (e == ec) {
      for (int i = 1; i <= ic; ++i)
        if (deg[static_cast<size_t>(i)] != target[static_cast<size_t>(i)]) return false;
      std::vector<int> parent(static_cast<size_t>(ic) + 1);
      for (int i = 0; i <= ic; ++i) parent[static_cast<size_t>(i)] = i;
      std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] =
                                                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
      };
      for (int f = 0; f < ec; ++f)
        if (mult[static_cast<size_t>(f)] > 0)
          parent[static_cast<size_t>(find(g.edge(f).first))] = find(g.edge(f).second);
      for (int i = 2; i <= ic; ++i)
        if (find(i) != find(1)) return false;
      return true;
    }
    auto [u, v] = g.edge(e);
    unassigned[static_cast<size_t>(u)] -= 1;
    unassigned[static_cast<size_t>(v)] -= 1;
    for (int m = 0; m <= 2; ++m) {
      if (deg[static_cast<size_t>(u)] + m > target[static_cast<size_t>(u)]) break;
      if (deg[static_cast<size_t>(v)] + m > target[static_cast<size_t>(v)]) break;
      if (deg[static_cast<size_t>(u)] + m + 2 * unassigned[static_cast<size_t>(u)] <
          target[static_cast<size_t>(u)])
        continue;
      if (deg[static_cast<size_t>(v)] + m + 2 * unassigned[static_cast<size_t>(v)] <
          target[static_cast<size_t>(v)])
        continue;
      if (m > 0) {
        bool blocked = false;
        for (int other : conflicts[static_cast<size_t>(e)])
          if (mult[static_cast<size_t>(other)] > 0) blocked = true;
        if (blocked) continue;
      }
      mult[static_cast<size_t>(e)] = m;
      deg[static_cast<size_t>(u)] += m;
      deg[static_cast<size_t>(v)] += m;
      if (assign(e + 1)) return true;
      deg[static_cast<size_t>(u)] -= m;
      deg[static_cast<size_t>(v)] -= m;
      mult[static_cast<size_t>(e)] = 0;
    }
    unassigned[static_cast<size_t>(u)] += 1;
    unassigned[static_cast<size_t>(v)] += 1;
    return false;
  };

  if (!assign(0)) return std::nullopt;
  BridgesSolution sol;
  for (int e = 0; e < ec; ++e)
    if (mult[static_cast<size_t>(e)] > 0) sol.bridges.push_back(edge_bridge(e, mult[static_cast<size_t>(e)]));
  return sol;
}

// --- the card protocol -------------------------------------------------------

namespace {

// 3 secret cards from the prover, publicly extended with six clubs.
Sequence deal_lip(Table& table, int value, const std::string& tag) {
  Sequence secret = table.deal_pattern(encode_pattern(value, 3));
  Sequence ext = table.deal_pattern(std::vector<Suit>(6, Suit::Club));
  table.turn_over(ext, tag + ".ext");
  turn_down(ext);
  std::vector<Card> cards = std::move(secret).release_cards();
  for (Card& c : std::move(ext).release_cards()) cards.push_back(std::move(c));
  return Sequence(std::move(cards));
}

void check_boundary_zero(Sequence& lip, Table& table, const std::string& tag) {
  table.turn_over(lip, tag + ".zero");
  bool ok = lip.card(0).suit() == Suit::Heart;
  for (int i = 1; i < lip.modulus(); ++i) ok = ok && lip.card(i).suit() == Suit::Club;
  if (!ok) throw VerifierReject(tag + ".zero", "boundary lip must encode 0");
  turn_down(lip);
}

// Copies the sequence sitting in `slot`, leaving an equal-valued original
// behind and returning the fresh copy.
Sequence copy_off(Sequence& slot, Table& table, const std::string& tag) {
  std::vector<Sequence> out = copy_sequence(std::move(slot), 1, table, tag);
  slot = std::move(out[0]);
  return std::move(out[1]);
}

// One 2x9 counting matrix: true iff both consumed sequences encode the
// same value.
bool compare_equal(Sequence x, Sequence y, Table& table, const std::string& tag) {
  CardMatrix m(2, x.modulus());
  m.place_row(0, std::move(x));
  m.place_row(1, std::move(y));
  int t = neighbor_count(m, table, tag);
  table.discard_hidden(m.take_row(0));
  table.discard_hidden(m.take_row(1));
  return t == 1;
}

}  // namespace

Verdict verify_bridges(const BridgesInstance& inst, const BridgesSolution& sol, Table& table) {
  LipValues lv = lip_values(inst, sol);  // also shape-checks the witness
  std::vector<Cell> isl = inst.islands();

  try {
    table.set_group("lips");
    std::vector<std::vector<Sequence>> hlip(static_cast<size_t>(inst.rows) + 1);
    std::vector<std::vector<Sequence>> vlip(static_cast<size_t>(inst.rows));
    for (int r = 0; r <= inst.rows; ++r) {
      hlip[static_cast<size_t>(r)].resize(static_cast<size_t>(inst.cols));
      for (int c = 0; c < inst.cols; ++c)
        hlip[static_cast<size_t>(r)][static_cast<size_t>(c)] = deal_lip(
            table, lv.horizontal[static_cast<size_t>(r)][static_cast<size_t>(c)] % 3,
            lip_tag(true, r, c));
    }
    for (int r = 0; r < inst.rows; ++r) {
      vlip[static_cast<size_t>(r)].resize(static_cast<size_t>(inst.cols) + 1);
      for (int c = 0; c <= inst.cols; ++c)
        vlip[static_cast<size_t>(r)][static_cast<size_t>(c)] = deal_lip(
            table, lv.vertical[static_cast<size_t>(r)][static_cast<size_t>(c)] % 3,
            lip_tag(false, r, c));
    }

    table.set_group("boundary");
    for (int c = 0; c < inst.cols; ++c) {
      check_boundary_zero(hlip[0][static_cast<size_t>(c)], table, lip_tag(true, 0, c));
      check_boundary_zero(hlip[static_cast<size_t>(inst.rows)][static_cast<size_t>(c)], table,
                          lip_tag(true, inst.rows, c));
    }
    for (int r = 0; r < inst.rows; ++r) {
      check_boundary_zero(vlip[static_cast<size_t>(r)][0], table, lip_tag(false, r, 0));
      check_boundary_zero(vlip[static_cast<size_t>(r)][static_cast<size_t>(inst.cols)], table,
                          lip_tag(false, r, inst.cols));
    }

    for (const Cell& cell : isl) {
      auto [r, c] = cell;
      std::string tag = "isl" + cell_suffix(r, c);
      GroupGuard guard(table, tag);
      Sequence top = copy_off(hlip[static_cast<size_t>(r)][static_cast<size_t>(c)], table,
                              tag + ".cp1");
      Sequence left = copy_off(vlip[static_cast<size_t>(r)][static_cast<size_t>(c)], table,
                               tag + ".cp2");
      Sequence bottom = copy_off(hlip[static_cast<size_t>(r) + 1][static_cast<size_t>(c)], table,
                                 tag + ".cp3");
      Sequence right = copy_off(vlip[static_cast<size_t>(r)][static_cast<size_t>(c) + 1], table,
                                tag + ".cp4");
      Sequence sum = add_sequences(std::move(top), std::move(left), table, tag + ".add1");
      sum = add_sequences(std::move(sum), std::move(bottom), table, tag + ".add2");
      sum = add_sequences(std::move(sum), std::move(right), table, tag + ".add3");
      Sequence want = table.deal_public(inst.island_number(r, c), 9, tag + ".deal");
      if (!compare_equal(std::move(sum), std::move(want), table, tag + ".count"))
        throw VerifierReject(tag + ".count", "island sum does not match its number");
    }

    for (int r = 0; r < inst.rows; ++r) {
      for (int c = 0; c < inst.cols; ++c) {
        if (inst.is_island(r, c)) continue;
        std::string tag = "cell" + cell_suffix(r, c);
        GroupGuard guard(table, tag);
        Sequence top = copy_off(hlip[static_cast<size_t>(r)][static_cast<size_t>(c)], table,
                                tag + ".cp1");
        Sequence bottom = copy_off(hlip[static_cast<size_t>(r) + 1][static_cast<size_t>(c)],
                                   table, tag + ".cp3");
        if (!compare_equal(std::move(top), std::move(bottom), table, tag + ".vert"))
          throw VerifierReject(tag + ".vert", "vertical crossing count changes inside a cell");
        Sequence lft = copy_off(vlip[static_cast<size_t>(r)][static_cast<size_t>(c)], table,
                                tag + ".cp2");
        Sequence rgt = copy_off(vlip[static_cast<size_t>(r)][static_cast<size_t>(c) + 1], table,
                                tag + ".cp4");
        if (!compare_equal(std::move(lft), std::move(rgt), table, tag + ".horiz"))
          throw VerifierReject(tag + ".horiz", "horizontal crossing count changes inside a cell");
        Sequence ph = copy_off(hlip[static_cast<size_t>(r)][static_cast<size_t>(c)], table,
                               tag + ".cp5");
        Sequence pv = copy_off(vlip[static_cast<size_t>(r)][static_cast<size_t>(c)], table,
                               tag + ".cp6");
        Sequence prod = multiply_sequences(std::move(ph), std::move(pv), table, tag + ".mul");
        Sequence zero = table.deal_public(0, 9, tag + ".zero.deal");
        if (!compare_equal(std::move(prod), std::move(zero), table, tag + ".cross"))
          throw VerifierReject(tag + ".cross", "cell is crossed both ways");
      }
    }

    Verdict out = Verdict::accept();
    if (!isl.empty()) {
      Graph g = island_graph(inst);
      EdgeFlags h(static_cast<size_t>(g.edge_count()), false);
      SubgraphCommitment commitment;
      for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        Cell cu = isl[static_cast<size_t>(u - 1)];
        Cell cv = isl[static_cast<size_t>(v - 1)];
        bool corow = cu.first == cv.first;
        Sequence& witness =
            corow ? vlip[static_cast<size_t>(cu.first)][static_cast<size_t>(cu.second) + 1]
                  : hlip[static_cast<size_t>(cu.first) + 1][static_cast<size_t>(cu.second)];
        int b =
            (corow ? lv.vertical[static_cast<size_t>(cu.first)][static_cast<size_t>(cu.second) + 1]
                   : lv.horizontal[static_cast<size_t>(cu.first) + 1]
                                  [static_cast<size_t>(cu.second)]) %
            3;
        h[static_cast<size_t>(e)] = b != 0;

        std::string tag = "xtr.e" + std::to_string(e);
        GroupGuard guard(table, tag + ".mix");
        std::vector<Card> cards = std::move(witness).release_cards();
        std::vector<Card> pile;
        pile.push_back(std::move(cards[1]));
        pile.push_back(std::move(cards[2]));
        for (size_t i = 3; i < cards.size(); ++i) table.release(std::move(cards[i]));
        scramble_pile(pile, table, tag + ".mix", RandomSource::DrawClass::Cosmetic);
        int clubs = (pile[0].suit() == Suit::Club ? 1 : 0) + (pile[1].suit() == Suit::Club ? 1 : 0);
        int slot;
        if (clubs == 1)
          slot = pile[0].suit() == Suit::Club ? 0 : 1;
        else if (clubs == 2)
          slot = table.rng().draw(2, RandomSource::DrawClass::Cosmetic);
        else
          slot = 0;  // nothing to show; the reveal below convicts the prover
        std::string reveal_tag = tag + ".club.slot" + std::to_string(slot);
        table.turn_over(pile[static_cast<size_t>(slot)], reveal_tag);
        if (pile[static_cast<size_t>(slot)].suit() != Suit::Club)
          throw VerifierReject(reveal_tag, "prover failed to reveal a club");
        table.release(std::move(pile[static_cast<size_t>(slot)]));
        std::vector<Card> bcards;
        bcards.push_back(std::move(cards[0]));
        bcards.push_back(std::move(pile[static_cast<size_t>(1 - slot)]));
        commitment.b.push_back(Sequence(std::move(bcards)));
      }

      table.set_group("lips.teardown");
      for (std::vector<Sequence>& row : hlip)
        for (Sequence& lip : row)
          if (!lip.empty()) table.discard_hidden(std::move(lip));
      for (std::vector<Sequence>& row : vlip)
        for (Sequence& lip : row)
          if (!lip.empty()) table.discard_hidden(std::move(lip));

      std::vector<int> coloring = greedy_coloring(g);
      HonestSpanningProver prover(g, coloring, h);
      out = verify_connected_spanning(g, coloring, commitment, prover, table, "span.");
      if (out.accepted)
        for (Sequence& bseq : commitment.b) table.discard_hidden(std::move(bseq));
    } else {
      table.set_group("lips.teardown");
      for (std::vector<Sequence>& row : hlip)
        for (Sequence& lip : row)
          if (!lip.empty()) table.discard_hidden(std::move(lip));
      for (std::vector<Sequence>& row : vlip)
        for (Sequence& lip : row)
          if (!lip.empty()) table.discard_hidden(std::move(lip));
    }
    return out;
  } catch (const VerifierReject& r) {
    return Verdict::reject(r.where(), r.why());
  }
}

// --- the worked example --------------------------------------------------------

BridgesInstance example_instance() {
  return BridgesInstance::parse(
      ".1.....\n"
      "2..2..1\n"
      ".......\n"
      ".5.6.1.\n"
      "....2.3\n"
      ".2.....\n"
      "3..4..2\n");
}

BridgesSolution example_solution() {
  BridgesSolution sol;
  auto push = [&sol](int r1, int c1, int r2, int c2, int mult) {
    Bridge b;
    b.r1 = r1;
    b.c1 = c1;
    b.r2 = r2;
    b.c2 = c2;
    b.multiplicity = mult;
    sol.bridges.push_back(b);
  };
  push(0, 1, 3, 1, 1);
  push(1, 0, 6, 0, 2);
  push(1, 3, 1, 6, 1);
  push(1, 3, 3, 3, 1);
  push(3, 1, 3, 3, 2);
  push(3, 1, 5, 1, 2);
  push(3, 3, 3, 5, 1);
  push(3, 3, 6, 3, 2);
  push(4, 4, 4, 6, 2);
  push(4, 6, 6, 6, 1);
  push(6, 0, 6, 3, 1);
  push(6, 3, 6, 6, 1);
  return sol;
}

}  // namespace cardzk
