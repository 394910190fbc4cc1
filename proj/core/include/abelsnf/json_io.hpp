#pragma once

#include <nlohmann/json.hpp>

#include "abelsnf/abelian_group.hpp"
#include "abelsnf/bigint.hpp"
#include "abelsnf/cyclotomic.hpp"
#include "abelsnf/matrix.hpp"
#include "abelsnf/predictor.hpp"
#include "abelsnf/snf.hpp"
#include "abelsnf/spectrum.hpp"

namespace abelsnf {

using Json = nlohmann::json;

// Integers that fit in 64 bits serialize as JSON numbers, larger ones as
// decimal strings.
Json to_json(const BigInt& value);
Json to_json(const CyclotomicInteger& value);
Json to_json(const Spectrum& spectrum);
Json to_json(const PredictedProfile& profile);
Json to_json(const ElementaryDivisorProfile& profile);
Json to_json(const AbelianGroupStructure& group);
Json to_json(const SmithDecomposition& snf);
Json to_json(const IntegerMatrix& matrix);

}  // namespace abelsnf
