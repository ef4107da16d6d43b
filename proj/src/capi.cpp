#include "crosscap/crosscap.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "error.hpp"
#include "serialize.hpp"

struct cc_instance {
  crosscap::Instance value;
};
struct cc_decision {
  crosscap::Decision value;
};
struct cc_certificate {
  crosscap::Certificate value;
};
struct cc_enumeration {
  crosscap::EnumeratedGroup value;
};

namespace {

using crosscap::ErrorCode;

thread_local std::string last_error;

cc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CC_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return CC_DIMENSION_MISMATCH;
    case ErrorCode::IndexOutOfRange: return CC_INDEX_ERROR;
    case ErrorCode::BadTwistSupport: return CC_BAD_TWIST_SUPPORT;
    case ErrorCode::NotOrthogonal: return CC_NOT_ORTHOGONAL;
    case ErrorCode::RowSumViolation: return CC_ROW_SUM_VIOLATION;
    case ErrorCode::NonUnimodular: return CC_NON_UNIMODULAR;
    case ErrorCode::BadBoundaryColumn: return CC_BAD_BOUNDARY_COLUMN;
    case ErrorCode::RelationNotPreserved: return CC_RELATION_NOT_PRESERVED;
    case ErrorCode::NonAutomorphism: return CC_NON_AUTOMORPHISM;
    case ErrorCode::InconsistentSinglePuncture: return CC_INCONSISTENT_SINGLE_PUNCTURE;
    case ErrorCode::QuotientNotUnimodular: return CC_QUOTIENT_NOT_UNIMODULAR;
    case ErrorCode::TwistHasNoIntegerMatrix: return CC_TWIST_HAS_NO_INTEGER_MATRIX;
    case ErrorCode::NotKernel: return CC_NOT_KERNEL;
    case ErrorCode::NotResidual: return CC_NOT_RESIDUAL;
    case ErrorCode::ResourceLimit: return CC_RESOURCE_LIMIT;
    case ErrorCode::ParseError: return CC_PARSE_ERROR;
    case ErrorCode::InternalInvariant: return CC_INTERNAL_ERROR;
  }
  return CC_INTERNAL_ERROR;
}

cc_status fail(cc_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
cc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CC_OK;
  } catch (const crosscap::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CC_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(CC_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(CC_INTERNAL_ERROR, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw crosscap::Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* cc_status_name(cc_status status) {
  switch (status) {
    case CC_OK: return "Ok";
    case CC_INVALID_ARGUMENT: return "InvalidArgument";
    case CC_DIMENSION_MISMATCH: return "DimensionMismatch";
    case CC_INDEX_ERROR: return "IndexError";
    case CC_BAD_TWIST_SUPPORT: return "BadTwistSupport";
    case CC_NOT_ORTHOGONAL: return "NotOrthogonal";
    case CC_ROW_SUM_VIOLATION: return "RowSumViolation";
    case CC_NON_UNIMODULAR: return "NonUnimodular";
    case CC_BAD_BOUNDARY_COLUMN: return "BadBoundaryColumn";
    case CC_RELATION_NOT_PRESERVED: return "RelationNotPreserved";
    case CC_NON_AUTOMORPHISM: return "NonAutomorphism";
    case CC_INCONSISTENT_SINGLE_PUNCTURE: return "InconsistentSinglePuncture";
    case CC_QUOTIENT_NOT_UNIMODULAR: return "QuotientNotUnimodular";
    case CC_TWIST_HAS_NO_INTEGER_MATRIX: return "TwistHasNoIntegerMatrix";
    case CC_NOT_KERNEL: return "NotKernel";
    case CC_NOT_RESIDUAL: return "NotResidual";
    case CC_RESOURCE_LIMIT: return "ResourceLimit";
    case CC_PARSE_ERROR: return "ParseError";
    case CC_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

const char* cc_last_error(void) { return last_error.c_str(); }

int cc_status_is_input_error(cc_status status) {
  return status != CC_OK && status != CC_RESOURCE_LIMIT && status != CC_INTERNAL_ERROR;
}

void cc_string_free(char* s) { std::free(s); }

cc_status cc_instance_from_json(const char* json, cc_instance** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto inst = std::make_unique<cc_instance>();
    inst->value = crosscap::instance_from_json(crosscap::parse_json(json));
    *out = inst.release();
  });
}

cc_status cc_instance_to_json(const cc_instance* inst, char** out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    *out = copy_string(crosscap::dump(crosscap::instance_to_json(inst->value)));
  });
}

cc_status cc_instance_generate(int crosscaps, int punctures, size_t length, uint64_t seed, int corrupt,
                               int permute_crosscaps, cc_instance** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    crosscap::GenerateOptions opt;
    opt.signature = {crosscaps, punctures};
    opt.length = length;
    opt.seed = seed;
    opt.corrupt = corrupt != 0;
    opt.permute_crosscaps = permute_crosscaps != 0;
    auto inst = std::make_unique<cc_instance>();
    inst->value = crosscap::generate_instance(opt).instance;
    *out = inst.release();
  });
}

int cc_instance_crosscaps(const cc_instance* inst) { return inst ? inst->value.signature.crosscaps : 0; }
int cc_instance_punctures(const cc_instance* inst) { return inst ? inst->value.signature.punctures : 0; }
void cc_instance_free(cc_instance* inst) { delete inst; }

cc_status cc_decide(const cc_instance* inst, const cc_decide_options* options, cc_decision** out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    crosscap::DecideOptions opt;
    if (options != nullptr) {
      if (options->kernel_move_limit != 0) opt.kernel.move_limit = options->kernel_move_limit;
      if (options->kernel_row_descent) opt.kernel.strategy = crosscap::KernelStrategy::RowDescent;
    }
    auto d = std::make_unique<cc_decision>();
    d->value = crosscap::decide(inst->value, opt);
    *out = d.release();
  });
}

int cc_decision_realizable(const cc_decision* d) { return d && d->value.realizable ? 1 : 0; }

const char* cc_decision_reason(const cc_decision* d) {
  return d ? crosscap::to_string(d->value.reason) : nullptr;
}

const char* cc_decision_completeness(const cc_decision* d) {
  if (d == nullptr || !d->value.completeness) return nullptr;
  return crosscap::to_string(*d->value.completeness);
}

cc_status cc_decision_certificate(const cc_decision* d, cc_certificate** out) {
  return guarded([&] {
    require(d != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    if (!d->value.certificate) return;
    auto c = std::make_unique<cc_certificate>();
    c->value = *d->value.certificate;
    *out = c.release();
  });
}

cc_status cc_decision_to_json(const cc_decision* d, int include_trace, char** out) {
  return guarded([&] {
    require(d != nullptr && out != nullptr, "null argument");
    *out = copy_string(crosscap::dump(crosscap::decision_to_json(d->value, include_trace != 0)));
  });
}

void cc_decision_free(cc_decision* d) { delete d; }

cc_status cc_certificate_from_json(const char* json, cc_certificate** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto c = std::make_unique<cc_certificate>();
    c->value = crosscap::certificate_from_json(crosscap::parse_json(json));
    *out = c.release();
  });
}

cc_status cc_certificate_to_json(const cc_certificate* cert, int include_trace, char** out) {
  return guarded([&] {
    require(cert != nullptr && out != nullptr, "null argument");
    *out = copy_string(crosscap::dump(crosscap::certificate_to_json(cert->value, include_trace != 0)));
  });
}

cc_status cc_certificate_trace_json(const cc_certificate* cert, char** out) {
  return guarded([&] {
    require(cert != nullptr && out != nullptr, "null argument");
    crosscap::Json j;
    j["kernel"] = crosscap::trace_to_json(cert->value.meta.kernel_trace);
    j["boundary"] = crosscap::trace_to_json(cert->value.meta.boundary_trace);
    *out = copy_string(crosscap::dump(j));
  });
}

size_t cc_certificate_move_count(const cc_certificate* cert) { return cert ? cert->value.moves.size() : 0; }
void cc_certificate_free(cc_certificate* cert) { delete cert; }

cc_status cc_verify(const cc_instance* inst, const cc_certificate* cert, int* accepted, char** reason) {
  return guarded([&] {
    require(inst != nullptr && cert != nullptr && accepted != nullptr, "null argument");
    if (reason != nullptr) *reason = nullptr;
    const crosscap::Verdict v = crosscap::verify_certificate(inst->value, cert->value);
    *accepted = v.accepted ? 1 : 0;
    if (!v.accepted && reason != nullptr) *reason = copy_string(v.reason);
  });
}

cc_status cc_enumerate(int dim, cc_enumeration** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    auto e = std::make_unique<cc_enumeration>();
    e->value = crosscap::enumerate_orthogonal(dim);
    *out = e.release();
  });
}

uint64_t cc_enumeration_order(const cc_enumeration* e) { return e ? e->value.order() : 0; }

uint64_t cc_enumeration_count(const cc_enumeration* e, int length) {
  if (e == nullptr) return 0;
  const auto hist = e->value.length_histogram();
  const auto it = hist.find(length);
  return it == hist.end() ? 0 : it->second;
}

int cc_enumeration_max_length(const cc_enumeration* e) {
  if (e == nullptr || e->value.lengths.empty()) return 0;
  return *std::max_element(e->value.lengths.begin(), e->value.lengths.end());
}

cc_status cc_enumeration_to_json(const cc_enumeration* e, char** out) {
  return guarded([&] {
    require(e != nullptr && out != nullptr, "null argument");
    *out = copy_string(crosscap::dump(crosscap::enumeration_to_json(e->value)));
  });
}

void cc_enumeration_free(cc_enumeration* e) { delete e; }

}  // extern "C"
