// catalog.hpp
// Canonical three-qubit entangled states of the Acin classification, party
// role assignments, the named Pauli correction protocols, and the reference
// registry of scenarios with their published fidelity forms and best
// measurement conditions.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tpt/form.hpp"
#include "tpt/qcore.hpp"

namespace tpt {

enum class StateType : int {
    t2aI, t2aII, t2b, t3a, t3bI, t3bII, t3bIII,
    t4a, t4bI, t4bII, t4c, t5, w_std,
};

inline constexpr std::array<StateType, 13> kAllStateTypes = {
    StateType::t2aI, StateType::t2aII, StateType::t2b, StateType::t3a,
    StateType::t3bI, StateType::t3bII, StateType::t3bIII, StateType::t4a,
    StateType::t4bI, StateType::t4bII, StateType::t4c, StateType::t5,
    StateType::w_std};

std::string_view state_tag(StateType t);                       // "2aI", ..., "W-std"
std::optional<StateType> parse_state_tag(std::string_view s);  // inverse

// Normalized canonical 3-qubit state for a tag, in |x_A x_B x_C> order.
const StateVector& canonical_state(StateType t);

// The three parties hold composite qubits 1 (A), 2 (B), 3 (C); the
// information qubit is composite qubit 0.
enum class Party : int { A = 0, B = 1, C = 2 };

char party_name(Party p);
int party_qubit(Party p);  // composite qubit index, 1..3

struct RoleAssignment {
    Party sender = Party::A;
    Party cosender = Party::B;
    Party receiver = Party::C;

    bool valid() const;  // the three roles are a permutation of {A,B,C}
};

// Parses "A,B,C" (sender,cosender,receiver); rejects non-permutations.
std::optional<RoleAssignment> parse_roles(std::string_view s);
std::string roles_string(const RoleAssignment& r);

struct Scenario {
    StateType state = StateType::t2b;
    RoleAssignment roles;
};

// Receiver's conditional-unitary protocol: rows k=1,2, columns j=1..4.
struct CorrectionTable {
    std::array<std::array<Pauli, 4>, 2> cells{};

    Pauli at(int k, int j) const { return cells[k - 1][j - 1]; }
    bool rows_equal() const { return cells[0] == cells[1]; }

    // Base-4 encoding, row-major with cell (k=1, j=1) most significant.
    std::uint32_t encode() const;
    static CorrectionTable decode(std::uint32_t code);

    // 8 letters from {I,X,Y,Z}, row k=1 then row k=2 (e.g. "IZXYZIYX").
    std::string to_string() const;
    static std::optional<CorrectionTable> parse(std::string_view s);
};

enum class ProtocolName : int { ghz, w1, w2 };

std::string_view protocol_name(ProtocolName n);                     // "GHZ", "W-I", "W-II"
std::optional<ProtocolName> parse_protocol_name(std::string_view s);

const CorrectionTable& named_protocol(ProtocolName n);

enum class ProtocolFamily : int { ghz, w, other };

std::string_view family_name(ProtocolFamily f);

// One scenario row of the reference registry.
struct ReferenceResult {
    Scenario scenario;
    std::string case_label;  // e.g. "extended GHZ: Bob(sender) -> Alice(co-sender) -> Cindy(receiver)"
    ProtocolFamily family = ProtocolFamily::w;

    // Exact coefficients of a + b cos2nu + c cos(kappa) sin2nu + d sin(kappa) sin2nu.
    Rational a, b, c, d;
    FidelityForm form() const;

    // Table reproducing the form, and the name it was registered under.
    ProtocolName table_name = ProtocolName::ghz;
    const CorrectionTable& table() const { return named_protocol(table_name); }

    // Canonical best condition; empty for angle-independent (constant) rows.
    std::optional<BestCondition> best;
    double f_max() const;  // best->f_max, or the constant a for W rows

    bool resolved_by_search = false;  // table identified by enumeration over candidates
    bool symmetric_roles = false;     // swapping co-sender/receiver yields the same form
    bool baseline = false;            // one of the two symmetric-state reference rows
    bool normalization_adjusted = false;  // canonical amplitudes renormalized (type 5)
};

// The full reference registry: 18 scenario rows plus the GHZ and W baselines.
const std::vector<ReferenceResult>& scenario_registry();

}  // namespace tpt
