#pragma once

// JSON documents for certificates, specs, traces and reports.

#include "json.hpp"

#include "twosc/enumeration.hpp"
#include "twosc/gcb.hpp"
#include "twosc/graph.hpp"
#include "twosc/recognition.hpp"
#include "twosc/reduction.hpp"
#include "twosc/sbic.hpp"

namespace twosc {

using json = nlohmann::json;

void to_json(json& j, const Edge& e);
void to_json(json& j, const Graph& g);
/// Accepts {"n": ..., "edges": [[u, v], ...]} or {"graph6": "..."}.
void from_json(const json& j, Graph& g);

void to_json(json& j, const TwoScVerdict& v);
void to_json(json& j, const EdgeMaximalCertificate& c);
void to_json(json& j, const EdgeMinimalCertificate& c);
void to_json(json& j, const CriticalTriple& t);

void to_json(json& j, const SbicWitness& w);
void from_json(const json& j, SbicWitness& w);
void to_json(json& j, const SbicReport& r);

/// {"k", "l", "X": graph, "witness": {"A": [[...]], "B": [[...]]}}
void to_json(json& j, const GcbSpec& s);
void from_json(const json& j, GcbSpec& s);
void to_json(json& j, const GcbValidation& v);
/// The spec plus "roles": one entry per input vertex.
void to_json(json& j, const GcbDecomposition& d);

void to_json(json& j, const ReductionStep& s);
void to_json(json& j, const ReductionTrace& t);
void to_json(json& j, const TriangleClassification& c);

void to_json(json& j, const VerificationReport& r);
void to_json(json& j, const CountRow& r);
void to_json(json& j, const Finding& f);
void to_json(json& j, const VerificationSummary& s);

/// Full recognition report for one graph, as emitted by `twosc check`.
json check_report(const Graph& g);

}  // namespace twosc
