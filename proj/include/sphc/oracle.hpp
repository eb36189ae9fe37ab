#ifndef SPHC_ORACLE_HPP
#define SPHC_ORACLE_HPP

#include <string>
#include <vector>

#include "sphc/stanley_reisner.hpp"

namespace sphc {
namespace oracle {

/// One failed check: which identity, on what input, expected vs got.
struct Discrepancy {
    std::string operation;
    std::string input;
    std::string expected;
    std::string got;
};

struct OracleReport {
    std::string subject;
    long long checks_run = 0;
    std::vector<Discrepancy> discrepancies;

    bool pass() const { return discrepancies.empty(); }
};

struct IntegralHomology {
    HomologyProfile rational;        // ranks over Q from Smith normal form
    std::vector<long long> torsion_primes;  // primes where GF(p) may differ
};

/// Ground-truth reduced homology via Smith normal form of the integral
/// boundary operators. Shares no elimination code with the engine.
IntegralHomology homology_oracle(const SimplicialComplex& delta,
                                 long long max_faces = 4096);

/// f-vector splitting, Euler identity and the Mayer-Vietoris rank bound at a
/// vertex; report-only.
OracleReport mv_identity_check(const SimplicialComplex& delta, int v);

/// Leray number and Betti table recomputed entirely through the oracle.
int exhaustive_leray(const SimplicialComplex& delta, int max_vertices = 16);
BettiTable exhaustive_betti(const SimplicialComplex& delta, int max_vertices = 16);

}  // namespace oracle
}  // namespace sphc

#endif
