#include "gvc/errors.hpp"

#include "gvc/text.hpp"

namespace gvc {

UnknownVariableError::UnknownVariableError(std::string variable_, std::size_t position_)
    : Error(position_ == 0 ? "unknown variable '" + variable_ + "'"
                           : "unknown variable '" + variable_ + "' at position "
                                 + std::to_string(position_)),
      variable(std::move(variable_)),
      position(position_)
{
}

SyntaxError::SyntaxError(std::size_t position_, std::string expected_, std::string found_)
    : Error("syntax error at position " + std::to_string(position_) + ": expected " + expected_
            + ", found " + found_),
      position(position_),
      expected(std::move(expected_)),
      found(std::move(found_))
{
}

NotLocallyNilpotentError::NotLocallyNilpotentError(Rational q0_)
    : Error("Phi(Dy) is not locally nilpotent: constant coefficient q0 = "
            + format_rational(q0_) + " is nonzero"),
      q0(std::move(q0_))
{
}

NotInKernelError::NotInKernelError(Polynomial mixed_term_, Polynomial lambda_p_)
    : Error("P is not in the kernel: mixed term " + format(mixed_term_)
            + " survives the inverse shift; Lambda(P) = " + format(lambda_p_)),
      mixed_term(std::move(mixed_term_)),
      lambda_p(std::move(lambda_p_))
{
}

HypothesisViolatedError::HypothesisViolatedError(int m_, Polynomial witness_term_)
    : Error("hypothesis fails at m = " + std::to_string(m_) + ": witness term "
            + format(witness_term_)),
      m(m_),
      witness_term(std::move(witness_term_))
{
}

FormViolatedError::FormViolatedError(std::string reason_, Polynomial square_value_, Polynomial f_,
                                     Polynomial g_)
    : Error("form check failed: " + reason_ + " (f = " + format(f_) + ", g = " + format(g_)
            + ", Lambda^2(P^2) = " + format(square_value_) + ")"),
      reason(std::move(reason_)),
      square_value(std::move(square_value_)),
      f(std::move(f_)),
      g(std::move(g_))
{
}

NormalizationError::NormalizationError(Polynomial lambda_p_)
    : Error("q0 != 0 requires P to be a polynomial in x alone; Lambda(P) = " + format(lambda_p_)),
      lambda_p(std::move(lambda_p_))
{
}

} // namespace gvc
