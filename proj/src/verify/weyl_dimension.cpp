#include "moncrystal/verify.hpp"

#include "moncrystal/error.hpp"

namespace moncrystal {

boost::multiprecision::cpp_int weyl_dimension(const DynkinDiagram& d, const WeightVec& lambda) {
  using boost::multiprecision::cpp_int;
  cpp_int num = 1;
  cpp_int den = 1;
  for (const RootVec& beta : positive_roots(d)) {
    long long top = 0;
    for (Node k = 1; k <= d.rank(); ++k) top += static_cast<long long>(beta.at(k)) * (lambda.at(k) + 1);
    num *= top;
    den *= height(d, beta);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension product is not an integer");
  return num / den;
}

}  // namespace moncrystal
