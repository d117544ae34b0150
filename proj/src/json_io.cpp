#include "stonework/json_io.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "stonework/error.hpp"

namespace stonework::json_io {

  namespace {
    json const& require(json const& j, char const* key) {
      if (!j.is_object()) {
        throw InvalidArgument(std::string("expected a JSON object with key '") + key + "'");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw InvalidArgument(std::string("missing key '") + key + "'");
      }
      return *it;
    }

    template <typename T>
    T get_as(json const& j, char const* what) {
      try {
        return j.get<T>();
      } catch (nlohmann::json::exception const& e) {
        throw InvalidArgument(std::string("bad value for '") + what + "': " + e.what());
      }
    }

    using IndexTable = std::vector<std::vector<std::size_t>>;
  }  // namespace

  json parse(std::string const& text) {
    try {
      return json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      std::size_t line = 1, column = 1;
      std::size_t const stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
      for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      throw ParseError("malformed JSON", line, column);
    }
  }

  json rational_to_json(Rational const& r) {
    return to_string(r);
  }

  Rational rational_from_json(json const& j) {
    if (j.is_number_integer()) {
      return Rational(j.get<std::int64_t>());
    }
    if (!j.is_string()) {
      throw InvalidArgument("distances must be strings \"p/q\" or integers");
    }
    return parse_rational(j.get<std::string>());
  }

  ////////////////////////////////////////////////////////////////////////
  // finmon
  ////////////////////////////////////////////////////////////////////////

  json to_json(FiniteMonoid const& m) {
    return {{"size", m.size()}, {"identity", m.identity()}, {"table", m.table()}};
  }

  FiniteMonoid monoid_from_json(json const& j) {
    auto size     = get_as<std::size_t>(require(j, "size"), "size");
    auto identity = get_as<std::size_t>(require(j, "identity"), "identity");
    auto table    = get_as<IndexTable>(require(j, "table"), "table");
    if (table.size() != size) {
      throw InvalidArgument("'size' does not match the number of table rows");
    }
    return validate_monoid(table, identity);
  }

  json selfmap_to_json(SelfMap const& f) {
    return {{"map", f}};
  }

  SelfMap selfmap_from_json(json const& j) {
    json const& arr = j.is_array() ? j : require(j, "map");
    auto        f   = get_as<SelfMap>(arr, "map");
    for (Point y : f) {
      if (y >= f.size()) {
        throw InvalidArgument("self-map value out of range");
      }
    }
    if (f.empty()) {
      throw InvalidArgument("self-map must be nonempty");
    }
    return f;
  }

  json to_json(SelfMapMonoid const& m) {
    return {{"carrier_size", m.carrier_size()}, {"elements", m.elements()}};
  }

  SelfMapMonoid selfmap_monoid_from_json(json const& j) {
    return SelfMapMonoid::from_elements(
        get_as<std::size_t>(require(j, "carrier_size"), "carrier_size"),
        get_as<std::vector<SelfMap>>(require(j, "elements"), "elements"));
  }

  json to_json(MonoidAction const& a) {
    return {{"monoid", to_json(a.monoid())},
            {"carrier_size", a.carrier_size()},
            {"act", a.table()}};
  }

  MonoidAction action_from_json(json const& j) {
    return MonoidAction(monoid_from_json(require(j, "monoid")),
                        get_as<std::size_t>(require(j, "carrier_size"), "carrier_size"),
                        get_as<IndexTable>(require(j, "act"), "act"));
  }

  ////////////////////////////////////////////////////////////////////////
  // boolring
  ////////////////////////////////////////////////////////////////////////

  json to_json(BoolRing const& r) {
    return {{"atoms", r.atom_count()}};
  }

  BoolRing ring_from_json(json const& j) {
    return BoolRing(get_as<std::size_t>(require(j, "atoms"), "atoms"));
  }

  namespace {
    json bitstrings(std::vector<std::uint32_t> const& xs, std::size_t n) {
      json out = json::array();
      for (auto x : xs) {
        out.push_back(to_bitstring(x, n));
      }
      return out;
    }

    std::vector<std::uint32_t> parse_bitstrings(json const& j, char const* key) {
      auto strs = get_as<std::vector<std::string>>(j, key);
      if (strs.empty()) {
        throw InvalidArgument(std::string("'") + key + "' must be nonempty");
      }
      std::vector<std::uint32_t> out;
      for (auto const& s : strs) {
        out.push_back(parse_bitstring(s, strs.size()));
      }
      return out;
    }
  }  // namespace

  json to_json(RingEndo const& e) {
    return {{"atom_images", bitstrings(e.atom_images(), e.ring().atom_count())}};
  }

  RingEndo ring_endo_from_json(json const& j) {
    auto images = parse_bitstrings(require(j, "atom_images"), "atom_images");
    return RingEndo(BoolRing(images.size()), images);
  }

  json to_json(GroupEndo const& e) {
    return {{"matrix", bitstrings(e.rows(), e.ring().atom_count())}};
  }

  GroupEndo group_endo_from_json(json const& j) {
    auto rows = parse_bitstrings(require(j, "matrix"), "matrix");
    return GroupEndo(BoolRing(rows.size()), rows);
  }

  ////////////////////////////////////////////////////////////////////////
  // ultra
  ////////////////////////////////////////////////////////////////////////

  json to_json(Partition const& p) {
    return {{"classes", p.classes()}};
  }

  Partition partition_from_json(json const& j) {
    auto        classes = get_as<IndexTable>(require(j, "classes"), "classes");
    std::size_t n       = 0;
    for (auto const& c : classes) {
      n += c.size();
    }
    return Partition::from_classes(n, classes);
  }

  json to_json(UltraPseudometric const& d) {
    json rows = json::array();
    for (auto const& row : d.matrix()) {
      json r = json::array();
      for (auto const& v : row) {
        r.push_back(rational_to_json(v));
      }
      rows.push_back(std::move(r));
    }
    return {{"dist", std::move(rows)}};
  }

  UltraPseudometric metric_from_json(json const& j) {
    json const& rows = require(j, "dist");
    if (!rows.is_array()) {
      throw InvalidArgument("'dist' must be an array of rows");
    }
    DistanceMatrix d;
    for (auto const& row : rows) {
      if (!row.is_array()) {
        throw InvalidArgument("'dist' rows must be arrays");
      }
      std::vector<Rational> r;
      for (auto const& v : row) {
        r.push_back(rational_from_json(v));
      }
      d.push_back(std::move(r));
    }
    return UltraPseudometric(std::move(d));
  }

  json to_json(MonotoneChain const& c, ChainTail tail) {
    json levels = json::array();
    for (auto const& p : c.levels()) {
      levels.push_back(to_json(p));
    }
    return {{"carrier_size", c.carrier_size()},
            {"chain", std::move(levels)},
            {"tail", tail == ChainTail::discrete ? "discrete" : "stabilized"}};
  }

  MonotoneChain chain_from_json(json const& j) {
    auto                   n = get_as<std::size_t>(require(j, "carrier_size"), "carrier_size");
    std::vector<Partition> levels;
    json const&            arr = require(j, "chain");
    if (!arr.is_array()) {
      throw InvalidArgument("'chain' must be an array");
    }
    for (auto const& p : arr) {
      levels.push_back(partition_from_json(p));
    }
    return MonotoneChain(n, std::move(levels));
  }

  ChainTail chain_tail_from_json(json const& j) {
    if (!j.is_object() || !j.contains("tail")) {
      return ChainTail::discrete;
    }
    auto s = get_as<std::string>(j.at("tail"), "tail");
    if (s == "discrete") {
      return ChainTail::discrete;
    }
    if (s == "stabilized") {
      return ChainTail::stabilized;
    }
    throw InvalidArgument("'tail' must be \"discrete\" or \"stabilized\"");
  }

  json to_json(NonexpansiveResult const& r) {
    json out = {{"holds", r.holds}};
    if (r.witness) {
      out["witness"] = {{"x", (*r.witness)[0]}, {"y", (*r.witness)[1]}, {"s", (*r.witness)[2]}};
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // unif
  ////////////////////////////////////////////////////////////////////////

  json to_json(PartitionFamily const& f) {
    json members = json::array();
    for (auto const& p : f.members()) {
      members.push_back(to_json(p));
    }
    return {{"carrier_size", f.carrier_size()}, {"members", std::move(members)}};
  }

  PartitionFamily family_from_json(json const& j) {
    auto        n   = get_as<std::size_t>(require(j, "carrier_size"), "carrier_size");
    json const& arr = require(j, "members");
    if (!arr.is_array()) {
      throw InvalidArgument("'members' must be an array");
    }
    std::vector<Partition> members;
    for (auto const& p : arr) {
      members.push_back(partition_from_json(p));
    }
    return PartitionFamily(n, std::move(members));
  }

  json to_json(Cover const& c) {
    json blocks = json::array();
    for (PointSet b : c.blocks()) {
      std::vector<std::size_t> pts;
      for (std::size_t x = 0; x < c.carrier_size(); ++x) {
        if ((b >> x) & 1U) {
          pts.push_back(x);
        }
      }
      blocks.push_back(pts);
    }
    return {{"blocks", std::move(blocks)}};
  }

  Cover cover_from_json(json const& j) {
    auto                  blocks = get_as<IndexTable>(require(j, "blocks"), "blocks");
    std::size_t           n      = 0;
    std::vector<PointSet> sets;
    for (auto const& b : blocks) {
      PointSet s = 0;
      for (std::size_t x : b) {
        if (x >= Cover::max_points) {
          throw InvalidArgument("cover point out of range");
        }
        s |= PointSet{1} << x;
        n = std::max(n, x + 1);
      }
      sets.push_back(s);
    }
    return Cover(n, std::move(sets));
  }

  ////////////////////////////////////////////////////////////////////////
  // reports
  ////////////////////////////////////////////////////////////////////////

  json to_json(KantorovichNorm const& n, KantorovichSpace const& space) {
    json pairs = json::array();
    for (auto [x, y] : n.pairing) {
      json a = x == space.zero_point() ? json("zero") : json(x);
      json b = y == space.zero_point() ? json("zero") : json(y);
      pairs.push_back({a, b});
    }
    return {{"norm", rational_to_json(n.value)}, {"pairing", std::move(pairs)}};
  }

  json to_json(RnaCertificate const& c) {
    return {{"k", c.k},
            {"carrier_size", c.carrier_size},
            {"triples_checked", c.triples_checked},
            {"left_nonexpansive", to_json(c.left)},
            {"right_nonexpansive", to_json(c.right)},
            {"translations_lipschitz", c.translations_lipschitz},
            {"embedding_injective", c.embedding_injective},
            {"embedding_homomorphism", c.embedding_homomorphism},
            {"identity_balls_submonoids", c.identity_balls_submonoids},
            {"passed", c.passed()}};
  }

  json to_json(ObstructionWitness const& w, ContrastMonoid const& s) {
    return {{"j", w.j},
            {"u", w.u},
            {"u_label", s.label(w.u)},
            {"n", w.n},
            {"product", s.label(s.monoid().product(w.u, s.number_index(w.n)))}};
  }

}  // namespace stonework::json_io
