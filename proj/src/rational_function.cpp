#include "casorati/rational_function.hpp"

#include "casorati/errors.hpp"

namespace casorati {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den.degree() > 0) {
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
      num = divrem(num, g).first;
      den = divrem(den, g).first;
    }
  }
  BigRational lead = den.leading();
  if (lead != 1) {
    BigRational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

BigRational RationalFunction::constant_value() const {
  if (!is_constant()) fail(ErrorCode::InvalidArgument, "rational function is not constant");
  return num_.coeff(0);
}

BigRational RationalFunction::operator()(const BigRational& at) const {
  BigRational d = den_(at);
  if (casorati::is_zero(d)) fail(ErrorCode::PoleAtPoint, "pole at x = " + to_string(at));
  return num_(at) / d;
}

std::complex<double> RationalFunction::operator()(std::complex<double> at) const {
  return num_(at) / den_(at);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    *this = RationalFunction(num_ + rhs.num_, den_);
    return *this;
  }
  if (is_polynomial() && rhs.is_polynomial()) {
    // Both denominators are 1 after normalization.
    num_ += rhs.num_;
    return *this;
  }
  Polynomial g = gcd(den_, rhs.den_);
  Polynomial left = divrem(rhs.den_, g).first;   // rhs.den / g
  Polynomial right = divrem(den_, g).first;      // den / g
  *this = RationalFunction(num_ * left + rhs.num_ * right, den_ * left);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RationalFunction();
  if (is_polynomial() && rhs.is_polynomial()) {
    num_ *= rhs.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees small.
  Polynomial g1 = gcd(num_, rhs.den_);
  Polynomial g2 = gcd(rhs.num_, den_);
  Polynomial n1 = divrem(num_, g1).first, d2 = divrem(rhs.den_, g1).first;
  Polynomial n2 = divrem(rhs.num_, g2).first, d1 = divrem(den_, g2).first;
  *this = RationalFunction(n1 * n2, d1 * d2);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero rational function");
  return *this *= RationalFunction(rhs.den_, rhs.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::shift(const BigRational& k) const {
  RationalFunction r;
  r.num_ = num_.shift(k);
  r.den_ = den_.shift(k);  // shifting preserves both monicity and coprimality
  return r;
}

RationalFunction RationalFunction::derivative() const {
  if (is_polynomial()) return RationalFunction(num_.derivative() * (1 / den_.leading()));
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::pow(int n) const {
  if (n < 0) return RationalFunction(1) / pow(-n);
  RationalFunction r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

RationalFunction ratfunc_arith(const RationalFunction& a, const RationalFunction& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  fail(ErrorCode::InvalidArgument, "unknown field operation");
}

BigRational ratfunc_eval(const RationalFunction& a, const BigRational& x0) { return a(x0); }

std::string to_string(const RationalFunction& r, char var) {
  if (r.is_polynomial()) return to_string(r.num() * (1 / r.den().leading()), var);
  auto wrap = [var](const Polynomial& p) {
    bool single = p.degree() <= 0;
    if (!single) {
      int terms = 0;
      for (const auto& c : p.coeffs()) terms += is_zero(c) ? 0 : 1;
      single = terms == 1 && p.leading() == 1;
    }
    std::string s = to_string(p, var);
    return single && s.find('/') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(r.num()) + "/" + wrap(r.den());
}

}  // namespace casorati
