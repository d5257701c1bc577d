#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace partlat {

/// Base class of every error thrown by the library for bad input.
/// Internal invariant failures are reported as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class DuplicateLabel : public Error {
 public:
  explicit DuplicateLabel(std::string label)
      : Error("duplicate label '" + label + "'"), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(std::string label)
      : Error("unknown label '" + label + "'"), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// The closed relation is not antisymmetric. `cycle` lists labels
/// x0 < x1 < ... < x0 as given by the input pairs.
class CycleDetected : public Error {
 public:
  explicit CycleDetected(std::vector<std::string> cycle);
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// A pair of elements, carried by errors that point at an offending pair.
struct PairWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

class NotALattice : public Error {
 public:
  NotALattice(PairWitness witness, const std::string& what)
      : Error(what), witness_(witness) {}
  PairWitness witness() const noexcept { return witness_; }

 private:
  PairWitness witness_;
};

class NotPlos : public Error {
 public:
  NotPlos(PairWitness witness, const std::string& what)
      : Error(what), witness_(witness) {}
  PairWitness witness() const noexcept { return witness_; }

 private:
  PairWitness witness_;
};

class NotACongruence : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class ImageEscapes : public Error {
 public:
  ImageEscapes(std::size_t element, const std::string& what)
      : Error(what), element_(element) {}
  std::size_t element() const noexcept { return element_; }

 private:
  std::size_t element_;
};

class SideConditionFails : public Error {
 public:
  SideConditionFails(bool bottom_fails, bool top_fails, const std::string& what)
      : Error(what), bottom_fails_(bottom_fails), top_fails_(top_fails) {}
  bool bottom_fails() const noexcept { return bottom_fails_; }
  bool top_fails() const noexcept { return top_fails_; }

 private:
  bool bottom_fails_;
  bool top_fails_;
};

}  // namespace partlat
