#include "quivermod/algebra.hpp"

namespace quivermod {

const char* axiom_name(AxiomFailure::Axiom a) {
  switch (a) {
    case AxiomFailure::Axiom::Idempotent: return "idempotent";
    case AxiomFailure::Axiom::Unit: return "unit";
    case AxiomFailure::Axiom::Bigrading: return "bigrading";
    case AxiomFailure::Axiom::Associativity: return "associativity";
  }
  return "unknown";
}

}  // namespace quivermod
