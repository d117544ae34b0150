#ifndef STONEWORK_JSON_IO_HPP_
#define STONEWORK_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "stonework/boolring.hpp"
#include "stonework/contrast.hpp"
#include "stonework/finmon.hpp"
#include "stonework/navector.hpp"
#include "stonework/partition.hpp"
#include "stonework/ultra.hpp"
#include "stonework/unif.hpp"

// JSON schemas of the command-line interface.  Every *_from_json validates
// through the corresponding constructor, so malformed documents raise the
// same domain errors as direct construction; structural problems (missing
// keys, wrong types) raise InvalidArgument.  Only syntax errors raise
// ParseError.

namespace stonework::json_io {

  using json = nlohmann::json;

  //! Parses text, mapping syntax errors to ParseError with 1-based line and
  //! column.
  json parse(std::string const& text);

  // {"size": n, "identity": i, "table": [[...], ...]}, row = left factor.
  json         to_json(FiniteMonoid const& m);
  FiniteMonoid monoid_from_json(json const& j);

  // {"map": [...]}; a bare array is accepted on input.
  json    selfmap_to_json(SelfMap const& f);
  SelfMap selfmap_from_json(json const& j);

  // {"carrier_size": n, "elements": [[...], ...]}
  json          to_json(SelfMapMonoid const& m);
  SelfMapMonoid selfmap_monoid_from_json(json const& j);

  // {"atoms": n}
  json     to_json(BoolRing const& r);
  BoolRing ring_from_json(json const& j);

  // {"atom_images": ["0110", ...]}, atom 0 leftmost.
  json     to_json(RingEndo const& e);
  RingEndo ring_endo_from_json(json const& j);

  // {"matrix": ["0110", ...]}, one bitstring per row.
  json      to_json(GroupEndo const& e);
  GroupEndo group_endo_from_json(json const& j);

  // {"classes": [[...], ...]}, classes and their points ascending.
  json      to_json(Partition const& p);
  Partition partition_from_json(json const& j);

  // {"dist": [["p/q", ...], ...]}
  json              to_json(UltraPseudometric const& d);
  UltraPseudometric metric_from_json(json const& j);

  // {"carrier_size": n, "chain": [partition, ...], "tail": "discrete"}
  json          to_json(MonotoneChain const& c, ChainTail tail);
  MonotoneChain chain_from_json(json const& j);
  ChainTail     chain_tail_from_json(json const& j);

  // {"monoid": monoid, "carrier_size": n, "act": [[...], ...]}
  json         to_json(MonoidAction const& a);
  MonoidAction action_from_json(json const& j);

  // {"carrier_size": n, "members": [partition, ...]}
  json            to_json(PartitionFamily const& f);
  PartitionFamily family_from_json(json const& j);

  // {"blocks": [[...], ...]}; the carrier is the union of the blocks.
  json  to_json(Cover const& c);
  Cover cover_from_json(json const& j);

  json to_json(NonexpansiveResult const& r);
  json to_json(KantorovichNorm const& n, KantorovichSpace const& space);
  json to_json(RnaCertificate const& c);
  json to_json(ObstructionWitness const& w, ContrastMonoid const& s);

  json rational_to_json(Rational const& r);
  Rational rational_from_json(json const& j);

}  // namespace stonework::json_io

#endif  // STONEWORK_JSON_IO_HPP_
