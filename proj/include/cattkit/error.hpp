#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cattkit {

/// Every failure raised by the kernel carries one of these kinds.
enum class ErrorKind {
  // syntax
  IndexOutOfRange,
  // gsett
  IllTypedEntry,
  SourceTypeMismatch,
  TargetTypeMismatch,
  VariableTypeMismatch,
  CohNotAllowedInGSeTT,
  LengthMismatch,
  EntryIllTyped,
  // pasting
  NotAPastingContext,
  // catt
  NotPasting,
  TypeNotArrow,
  SideConditionFailedSource,
  SideConditionFailedTarget,
  SubstitutionIllTyped,
  AnnotationMismatch,
  // globular / batanin
  NotCardinal,
  NotParallel,
  NotSmooth,
  InvalidMorphism,
  InvalidTree,
  // computad
  DomainMismatch,
  InvalidSphere,
  UnknownGenerator,
  NotFull,
  DimensionViolation,
  // surface
  ParseError,
  UnknownName,
  DuplicateName,
  // a kernel invariant did not hold
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

using IndexSet = std::set<std::size_t>;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  /// Offending context entry / substitution entry / derivation position.
  const std::optional<std::size_t>& position() const noexcept { return position_; }
  /// For side-condition failures: the boundary variables and the variables of the type.
  const IndexSet& expected() const noexcept { return expected_; }
  const IndexSet& actual() const noexcept { return actual_; }
  const Error* cause() const noexcept { return cause_.get(); }

  Error& at(std::size_t position);
  Error& with_sets(IndexSet expected, IndexSet actual);
  Error& caused_by(const Error& cause);

  /// The message together with the chain of causes.
  std::string describe() const;

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
  IndexSet expected_;
  IndexSet actual_;
  std::shared_ptr<const Error> cause_;
};

[[noreturn]] void invariant_failure(const char* expr, const char* file, int line,
                                    const std::string& detail);

std::string format_set(const IndexSet& set);

}  // namespace cattkit

#define CATTKIT_ASSERT(cond, detail)                                       \
  do {                                                                     \
    if (!(cond)) ::cattkit::invariant_failure(#cond, __FILE__, __LINE__, detail); \
  } while (false)
