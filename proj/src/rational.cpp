#include "lnat/rational.hpp"

#include <algorithm>
#include <cctype>

namespace lnat {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(s.begin());
  }

  Rat q;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad rational literal: " + text);
    q = Rat(mpz_class(num), mpz_class(den));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw std::invalid_argument("bad decimal literal: " + text);
    mpz_class den(1);
    for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
    mpz_class num = mpz_class(ip.empty() ? "0" : ip) * den + mpz_class(fp.empty() ? "0" : fp);
    q = Rat(num, den);
    q.canonicalize();
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad integer literal: " + text);
    q = Rat(mpz_class(s));
  }
  if (negative) q = -q;
  return q;
}

std::string format_rational(const Rat& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace lnat
