#pragma once

#include "ptwh/matrix.hpp"
#include "ptwh/syk.hpp"

namespace ptwh {

struct ThermalConfig {
    double beta = 0.0;
    double partition_function = 0.0;      // overflows for very large beta*|E|
    double log_partition_function = 0.0;  // always finite
};

/// Partition function of the left side Hamiltonian at inverse
/// temperature beta (cross-check quantity; the TFD itself is
/// renormalized numerically).
ThermalConfig thermal_config(const SykRealization& realization, double beta);

/// Thermofield double |TFD> = Z^(-1/2) sum_i e^(-beta E_i/2)
/// |E_i>_L (x) |E_i*>_R on the two-sided register (dim 2^N), where
/// |E_i*>_R is the entrywise conjugate of the left eigenvector. Weights
/// are energy-shifted before exponentiation so any beta >= 0 is safe.
StateVector thermofield_double(const SykRealization& realization, double beta);

/// |Phi+>_(ref,msg) (x) |TFD>_(L,R) on the protocol register.
StateVector prepare_initial_state(const StateVector& tfd,
                                  const RegisterLayout& layout);

/// (|00> + |11>)/sqrt(2) on a 2-qubit space.
StateVector bell_target();

}  // namespace ptwh
