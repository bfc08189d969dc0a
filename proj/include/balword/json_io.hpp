#pragma once

#include "balword/balance.hpp"
#include "balword/cf.hpp"
#include "balword/dfao.hpp"
#include "balword/numeric.hpp"
#include "balword/repetitions.hpp"
#include "balword/search.hpp"
#include "balword/word.hpp"

#include <json.hpp>

namespace nlohmann {

// {"num": a, "den": b}; integers are strings once they leave the int64 range.
template <>
struct adl_serializer<balword::Rational> {
    static void to_json(json& j, const balword::Rational& r);
    static void from_json(const json& j, balword::Rational& r);
};

template <>
struct adl_serializer<balword::BigInt> {
    static void to_json(json& j, const balword::BigInt& n);
    static void from_json(const json& j, balword::BigInt& n);
};

}  // namespace nlohmann

namespace balword {

using nlohmann::json;

void to_json(json& j, const FiniteWord& w);
void from_json(const json& j, FiniteWord& w);

void to_json(json& j, const QuadraticNumber& x);
void from_json(const json& j, QuadraticNumber& x);

void to_json(json& j, const Repetition& r);
void from_json(const json& j, Repetition& r);

void to_json(json& j, const CriticalExponent& c);
void from_json(const json& j, CriticalExponent& c);

void to_json(json& j, const BalanceViolation& v);
void from_json(const json& j, BalanceViolation& v);
void to_json(json& j, const BalanceReport& r);
void from_json(const json& j, BalanceReport& r);

void to_json(json& j, const StandardPair& p);
void from_json(const json& j, StandardPair& p);
void to_json(json& j, const SubstitutionWitness& w);
void from_json(const json& j, SubstitutionWitness& w);
void to_json(json& j, const PruneRecord& r);
void from_json(const json& j, PruneRecord& r);
void to_json(json& j, const SearchOutcome& o);
void from_json(const json& j, SearchOutcome& o);

void to_json(json& j, const UltimatelyPeriodic& u);
void from_json(const json& j, UltimatelyPeriodic& u);
void to_json(json& j, const WeightPeriods& w);
void from_json(const json& j, WeightPeriods& w);
void to_json(json& j, const Dfao& d);
void from_json(const json& j, Dfao& d);
void to_json(json& j, const EquivalenceResult& r);
void from_json(const json& j, EquivalenceResult& r);
void to_json(json& j, const PeriodLawRecord& r);
void from_json(const json& j, PeriodLawRecord& r);

}  // namespace balword
