#include "nccalc/gauss_rat.hpp"

#include "nccalc/errors.hpp"

#include <cctype>
#include <ostream>

namespace nccalc {

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussRat GaussRat::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty Gaussian-rational literal");
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  bool imaginary = false;
  if (!s.empty() && s.front() == 'i') {
    imaginary = true;
    s.erase(0, 1);
  } else if (!s.empty() && s.back() == 'i') {
    imaginary = true;
    s.pop_back();
  }
  mpq_class magnitude(1);
  if (!s.empty()) {
    if (s[0] == '/') s.insert(s.begin(), '1');
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/')
        throw DomainError("malformed Gaussian-rational literal: " + text);
    try {
      magnitude = mpq_class(s);
    } catch (const std::invalid_argument&) {
      throw DomainError("malformed Gaussian-rational literal: " + text);
    }
    if (magnitude.get_den() == 0) throw DivisionByZero();
    magnitude.canonicalize();
  } else if (!imaginary) {
    throw DomainError("malformed Gaussian-rational literal: " + text);
  }
  if (negative) magnitude = -magnitude;
  return imaginary ? GaussRat(0, magnitude) : GaussRat(magnitude, 0);
}

std::string GaussRat::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "*i";
  }
  std::string out = re_.get_str();
  out += sgn(im_) < 0 ? "-" : "+";
  mpq_class a = abs(im_);
  out += a == 1 ? std::string("i") : a.get_str() + "*i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& q) { return os << q.to_string(); }

}  // namespace nccalc
