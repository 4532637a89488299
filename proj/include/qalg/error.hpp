#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

enum class errc {
  division_by_zero,
  mixed_field_operands,
  zero_polynomial,
  requires_positive_width,
  not_a_root,
  root_of_right_factor,
  negative_norm,
  zero_coefficient,
  non_square,
  non_conformant,
  c_not_invertible,
  size_cap,
  degree_cap,
  dimension_cap,
  bad_root_order,
  zero_parameter,
  wrong_characteristic,
  grading_violation,
  not_d_central,
  index_out_of_range,
  bad_parameters,
  x_not_d_central_unit,
  not_three_central_element,
  case_mismatch,
  bad_index,
  degenerate_result,
  denominator_zero,
  relation_violation,
  not_invertible,
  no_imaginary_root_found,
  parse_error,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::mixed_field_operands: return "MixedFieldOperands";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::requires_positive_width: return "RequiresPositiveWidth";
    case errc::not_a_root: return "NotARoot";
    case errc::root_of_right_factor: return "RootOfRightFactor";
    case errc::negative_norm: return "NegativeNorm";
    case errc::zero_coefficient: return "ZeroCoefficient";
    case errc::non_square: return "NonSquare";
    case errc::non_conformant: return "NonConformant";
    case errc::c_not_invertible: return "CNotInvertible";
    case errc::size_cap: return "SizeCap";
    case errc::degree_cap: return "DegreeCapExceeded";
    case errc::dimension_cap: return "DimensionCap";
    case errc::bad_root_order: return "BadRootOrder";
    case errc::zero_parameter: return "ZeroParameter";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::grading_violation: return "GradingViolation";
    case errc::not_d_central: return "NotDCentral";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::bad_parameters: return "BadParameters";
    case errc::x_not_d_central_unit: return "XNotDCentralUnit";
    case errc::not_three_central_element: return "NotThreeCentralElement";
    case errc::case_mismatch: return "CaseMismatch";
    case errc::bad_index: return "BadIndex";
    case errc::degenerate_result: return "DegenerateResult";
    case errc::denominator_zero: return "DenominatorZero";
    case errc::relation_violation: return "RelationViolation";
    case errc::not_invertible: return "NotInvertible";
    case errc::no_imaginary_root_found: return "NoImaginaryRootFound";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

// Domain error with a stable code; the CLI maps these to structured JSON.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace qalg
