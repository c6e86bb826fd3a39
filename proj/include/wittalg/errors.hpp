#ifndef WITTALG_ERRORS_HPP
#define WITTALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wittalg {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_argument : public error {
 public:
  using error::error;
};

class algebra_mismatch : public error {
 public:
  algebra_mismatch() : error("operands belong to different algebras") {}
  explicit algebra_mismatch(const std::string& what) : error(what) {}
};

class not_p_nilpotent : public error {
 public:
  not_p_nilpotent(std::size_t i, std::size_t s)
      : error("entry (" + std::to_string(i) + "," + std::to_string(s) + ") is not p-nilpotent"),
        index(i), level(s) {}
  std::size_t index;
  std::size_t level;
};

class nonzero_constant_term : public error {
 public:
  nonzero_constant_term() : error("divided powers are only defined on the augmentation ideal") {}
  explicit nonzero_constant_term(const std::string& what) : error(what) {}
};

class relation_violated : public error {
 public:
  relation_violated(std::size_t i, std::size_t s)
      : error("image of generator (" + std::to_string(i) + "," + std::to_string(s) +
              ") does not satisfy y^p = 0"),
        index(i), level(s) {}
  std::size_t index;
  std::size_t level;
};

class not_invertible : public error {
 public:
  not_invertible() : error("matrix is not invertible over the scalar ring") {}
  explicit not_invertible(const std::string& what) : error(what) {}
};

class not_a_derivation : public error {
 public:
  not_a_derivation() : error("operator is not a derivation of the carrier") {}
  explicit not_a_derivation(const std::string& what) : error(what) {}
};

class not_derivation_automorphism : public error {
 public:
  not_derivation_automorphism()
      : error("morphism does not normalize the Witt algebra (not a derivation-automorphism)") {}
  explicit not_derivation_automorphism(const std::string& what) : error(what) {}
};

class internal_decomposition_failure : public error {
 public:
  explicit internal_decomposition_failure(const std::string& what)
      : error("triangular decomposition failed: " + what) {}
};

class no_orthonormal_system : public error {
 public:
  explicit no_orthonormal_system(std::size_t rank)
      : error("no orthonormal system in the monomial net (max rank " + std::to_string(rank) + ")"),
        achieved_rank(rank) {}
  std::size_t achieved_rank;
};

class dependent_eigenvalues : public error {
 public:
  dependent_eigenvalues() : error("eigenscalars are linearly dependent over the prime field") {}
  explicit dependent_eigenvalues(const std::string& what) : error(what) {}
};

class inseparable_char_poly : public error {
 public:
  inseparable_char_poly() : error("characteristic polynomial is inseparable") {}
  explicit inseparable_char_poly(const std::string& what) : error(what) {}
};

class resource_error : public error {
 public:
  using error::error;
};

class iteration_cap_exceeded : public error {
 public:
  explicit iteration_cap_exceeded(const std::string& what) : error(what) {}
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace wittalg

#endif  // WITTALG_ERRORS_HPP
