#include "cattkit/error.hpp"

#include <sstream>

namespace cattkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::IllTypedEntry: return "IllTypedEntry";
    case ErrorKind::SourceTypeMismatch: return "SourceTypeMismatch";
    case ErrorKind::TargetTypeMismatch: return "TargetTypeMismatch";
    case ErrorKind::VariableTypeMismatch: return "VariableTypeMismatch";
    case ErrorKind::CohNotAllowedInGSeTT: return "CohNotAllowedInGSeTT";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EntryIllTyped: return "EntryIllTyped";
    case ErrorKind::NotAPastingContext: return "NotAPastingContext";
    case ErrorKind::NotPasting: return "NotPasting";
    case ErrorKind::TypeNotArrow: return "TypeNotArrow";
    case ErrorKind::SideConditionFailedSource: return "SideConditionFailedSource";
    case ErrorKind::SideConditionFailedTarget: return "SideConditionFailedTarget";
    case ErrorKind::SubstitutionIllTyped: return "SubstitutionIllTyped";
    case ErrorKind::AnnotationMismatch: return "AnnotationMismatch";
    case ErrorKind::NotCardinal: return "NotCardinal";
    case ErrorKind::NotParallel: return "NotParallel";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InvalidSphere: return "InvalidSphere";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::DimensionViolation: return "DimensionViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

Error& Error::at(std::size_t position) {
  position_ = position;
  return *this;
}

Error& Error::with_sets(IndexSet expected, IndexSet actual) {
  expected_ = std::move(expected);
  actual_ = std::move(actual);
  return *this;
}

Error& Error::caused_by(const Error& cause) {
  cause_ = std::make_shared<const Error>(cause);
  return *this;
}

std::string Error::describe() const {
  std::ostringstream out;
  out << to_string(kind_) << ": " << what();
  for (const Error* c = cause(); c != nullptr; c = c->cause()) {
    out << "\n  caused by " << to_string(c->kind()) << ": " << c->what();
  }
  return out.str();
}

void invariant_failure(const char* expr, const char* file, int line, const std::string& detail) {
  std::ostringstream out;
  out << "invariant `" << expr << "` failed at " << file << ":" << line;
  if (!detail.empty()) out << " (" << detail << ")";
  throw Error(ErrorKind::InternalInvariant, out.str());
}

std::string format_set(const IndexSet& set) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto i : set) {
    if (!first) out << ",";
    out << i;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace cattkit
