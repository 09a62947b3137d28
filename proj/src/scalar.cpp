#include "qschur/scalar.hpp"

#include <ostream>

#include "qschur/errors.hpp"

namespace qschur {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  normalize();
}

void GaussianRational::normalize() {
  if (sgn(re_.get_den()) == 0 || sgn(im_.get_den()) == 0) throw DivisionByZero();
  re_.canonicalize();
  im_.canonicalize();
}

static mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw InvalidArgument("empty rational");
  std::string t = s;
  if (t.front() == '+') t.erase(0, 1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw InvalidArgument("bad rational: " + s);
  if (sgn(q.get_den()) == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

GaussianRational GaussianRational::parse(const std::string& re, const std::string& im) {
  return GaussianRational(parse_rational(re), parse_rational(im));
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussianRational::rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "*eps";
  std::string im = im_.get_str();
  if (im.front() != '-') im = "+" + im;
  return re_.get_str() + im + "*eps";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace qschur
