#pragma once

#include <stdexcept>

#include <json.hpp>

#include "lantern/arc_engine.hpp"
#include "lantern/classifier.hpp"
#include "lantern/rewrite.hpp"

namespace lantern {

using Json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers that fit in 64 bits are plain JSON numbers; larger ones are
// decimal strings. Readers accept both.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

// {"r":[r1,r2,r3,r4],"blocks":[[m1,n1],...]}
Json to_json(const ReducedForm& rf);
ReducedForm reduced_form_from_json(const Json& j);

// {"verdict":"...","rules":["OT3","OT4"],"rotation":k,"mirror":false}
Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

// {"start":["C1",0],"end":["C4",1],"crossings":[["d1","+"],["d3","-"]]}
Json to_json(const Arc& arc);
Arc arc_from_json(const Json& j);

// {"word":...,"outcome":"NotRightVeering","bound":12,"boundary":"C2",
//  "witness":{arc},"image":{arc}}  or  {"word":...,
//  "outcome":"NoWitnessUpToBound","bound":12}
Json to_json(const RVReport& report, const Word& word);

// {"word":...,"rule":"H2","rotation":k,"conjugator":...}
Json to_json(const Factorization& f);

}  // namespace lantern
