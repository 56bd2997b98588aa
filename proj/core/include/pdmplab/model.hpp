#pragma once

#include "pdmplab/errors.hpp"

namespace pdmplab {

enum class ModelKind {
  kTcpVariable,  // unit drift, jump rate x, halving jumps
  kTcpConstant,  // unit drift, jump rate lambda, halving jumps
  kStorage,      // exponential decay at rate beta, Exp(1) increments at rate alpha
};

/// Which PDMP to simulate, plus the parameters relevant to that kind.
/// Parameters irrelevant to the kind stay at zero; use the factories.
struct ModelSpec {
  ModelKind kind = ModelKind::kTcpVariable;
  double lambda = 0.0;  // tcp-constant only
  double alpha = 0.0;   // storage only
  double beta = 0.0;    // storage only

  static ModelSpec tcp_variable() { return ModelSpec{}; }

  static ModelSpec tcp_constant(double lambda) {
    ModelSpec m;
    m.kind = ModelKind::kTcpConstant;
    m.lambda = lambda;
    m.validate();
    return m;
  }

  static ModelSpec storage(double alpha, double beta) {
    ModelSpec m;
    m.kind = ModelKind::kStorage;
    m.alpha = alpha;
    m.beta = beta;
    m.validate();
    return m;
  }

  void validate() const {
    switch (kind) {
      case ModelKind::kTcpVariable:
        if (lambda != 0.0 || alpha != 0.0 || beta != 0.0)
          throw UsageError("tcp-variable takes no rate parameters");
        break;
      case ModelKind::kTcpConstant:
        if (!(lambda > 0.0)) throw UsageError("tcp-constant requires lambda > 0");
        if (alpha != 0.0 || beta != 0.0)
          throw UsageError("tcp-constant takes no alpha/beta");
        break;
      case ModelKind::kStorage:
        if (!(alpha > 0.0) || !(beta > 0.0))
          throw UsageError("storage requires alpha > 0 and beta > 0");
        if (lambda != 0.0) throw UsageError("storage takes no lambda");
        break;
    }
  }

  bool operator==(const ModelSpec&) const = default;
};

}  // namespace pdmplab
