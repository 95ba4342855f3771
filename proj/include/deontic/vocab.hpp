#pragma once

#include <string>

#include "deontic/term.hpp"

namespace deontic::vocab {

inline const std::string kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string kOnt = "https://w3id.org/ontology/conflict-tolerantdeontictraditionalscheme#";
inline const std::string kSoa = "https://w3id.org/ontology/conflict-tolerantdeontictraditionalscheme#soa";

inline Term rdf(const char* local) { return Term::iri(kRdf + local); }
inline Term rdfs(const char* local) { return Term::iri(kRdfs + local); }
inline Term ont(const char* local) { return Term::iri(kOnt + local); }
inline Term soa(const char* local) { return Term::iri(kSoa + local); }

inline const Term type = rdf("type");
inline const Term subject = rdf("subject");
inline const Term predicate = rdf("predicate");
inline const Term object = rdf("object");
inline const Term Statement = rdf("Statement");
inline const Term Property = rdf("Property");
inline const Term Class = rdfs("Class");
inline const Term subClassOf = rdfs("subClassOf");
inline const Term domain = rdfs("domain");
inline const Term range = rdfs("range");
inline const Term label = rdfs("label");

inline const Term statement = ont("statement");
inline const Term true_ = ont("true");
inline const Term false_ = ont("false");
inline const Term hold = ont("hold");
inline const Term necessary = ont("necessary");
inline const Term possible = ont("possible");
inline const Term Eventuality = ont("Eventuality");
inline const Term Modality = ont("Modality");
inline const Term Rexist = ont("Rexist");
inline const Term DeonticModality = ont("DeonticModality");
inline const Term Obligatory = ont("Obligatory");
inline const Term Permitted = ont("Permitted");
inline const Term Optional = ont("Optional");
inline const Term ThematicRole = ont("ThematicRole");
inline const Term not_ = ont("not");
inline const Term and1 = ont("and1");
inline const Term and2 = ont("and2");
inline const Term or1 = ont("or1");
inline const Term or2 = ont("or2");
inline const Term disjunction = ont("disjunction");
inline const Term is_in_contradiction_with = ont("is-in-contradiction-with");
inline const Term is_in_conflict_with = ont("is-in-conflict-with");
inline const Term is_complied_with_by = ont("is-complied-with-by");
inline const Term is_violated_by = ont("is-violated-by");
inline const Term is_necessarily_violated_by = ont("is-necessarily-violated-by");
inline const Term InferenceRule = ont("InferenceRule");
inline const Term has_sparql_code = ont("has-sparql-code");

}  // namespace deontic::vocab
