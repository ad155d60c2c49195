#include "krammer/rational.hpp"

#include <stdexcept>

namespace krammer {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

bool is_integer(const Rat& q) {
  return q.get_den() == 1;
}

size_t rat_bits(const Rat& q) {
  if (q == 0) return 0;
  return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) + mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

} // namespace krammer
