#pragma once

#include <optional>

#include "klrs/hom_oracle.hpp"
#include "klrs/specht.hpp"

namespace klrs {

struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CPRejection {
    None,
    GammaZero,
    ResidueSetMismatch,
    JSizeMismatch,
    JTooLarge,
    RowConditionFailure,
    StripMembershipFailure,
};
std::string to_string(CPRejection r);

// one step of the tableau recursion: the strip being vacated, the active
// index range, and the swap targets
struct CPStep {
    RowIndex row;
    int jk = 0;                 // leftmost residue of the vacated strip
    int fk = 0, gk = 0;         // active range of h
    std::vector<int> eta;       // eta_h for h = fk..gk
    std::vector<int> l, m;      // l_h, m_h tables
};

struct CPCertificate {
    Multipartition lambda, mu, nu;
    ResidueData rd;
    int n = 0, gamma = 0, z = 0;
    std::vector<int> J;                  // sorted residues of nu\lambda
    std::vector<int> Jstar;
    std::map<int, int> gamma_j;
    std::map<int, Node> alpha_lambda, alpha_mu;
    std::vector<int> i_seq;              // residues of n+1..n+gamma in tnu_lambda
    std::vector<Strip> strips;           // candidate strips between rows r and s
    Tableau tnu_lambda, tnu_mu;
    std::vector<Tableau> t_seq;          // t_0 .. t_{z+1}
    std::vector<Multipartition> sigma;   // shapes of (t_k) restricted to n
    std::vector<CPStep> steps;           // k = 0 .. z
    std::vector<std::vector<int>> w_words;  // chosen reduced words of w_0..w_{z+1}
    std::vector<int> y_letters;          // the letter n+g_k of each step
    std::map<int, int> collected_exponents;  // g -> exponent c_g
    int a = 0, b = 0, c = 0, d = 0, delta = 0;
    bool mu_dominates_lambda = false;
    bool interleaving_flag = false;      // strips of distinct J* residues share a row

    GeneratorWord theta_word() const;          // product of y letters + e^lambda_mu idempotent filter
    GeneratorWord theta_word_collected() const;
};

struct CPResult {
    std::optional<CPCertificate> cert;
    CPRejection reason = CPRejection::None;
    std::string detail;
    bool ok() const { return cert.has_value(); }
};

CPResult cp_pair_check(const Multipartition& lambda, const Multipartition& mu,
                       const ResidueData& rd);
// same, but with the residue order of n+1..n+gamma imposed (used when several
// pairs must share one ambient anchoring)
CPResult cp_pair_check_anchored(const Multipartition& lambda, const Multipartition& mu,
                                const ResidueData& rd, const std::vector<int>& forced_i_seq);

struct DeltaComponents {
    int a = 0, b = 0, c = 0, d = 0, delta = 0;
};
DeltaComponents delta_components(const CPCertificate& cert);

int one_node_delta(const Multipartition& lambda, const Multipartition& mu,
                   const ResidueData& rd);

struct HomMap {
    Multipartition source, target;
    int degree = 0;
    ExactMatrix matrix;          // dim S^mu  x  dim S^lambda, canonical basis orders
    int leading_row = -1;        // index of the expected leading basis vector of S^mu
    Coeff leading_coeff = 0;     // its coefficient in the image of v_{t^lambda}
};

struct HomOptions {
    long long std_cap = 1'000'000;
    long long step_cap = 10'000'000;
    bool verify_intertwiner = true;
};

HomMap induced_hom(const CPCertificate& cert, const HomOptions& opts = {});

// expansion of v_{t^nu_sigma} y_{n+1}^k over chains of one-node restrictions
struct PushTerm {
    std::vector<Multipartition> chain;  // sigma_k > ... > sigma_1 > sigma
    Tableau tableau;                    // t_{(sigma_k, ..., sigma)}
    Permutation w;                      // the composite cycle product
    std::vector<int> psi_word;          // concatenated canonical words
};
std::vector<PushTerm> multipush_expand(const Multipartition& sigma, const Multipartition& nu,
                                       int i, int k, const ResidueData& rd);

struct CompositionResult {
    CPCertificate direct;       // the pair (lambda, mu)
    HomMap hom_direct, hom_first, hom_second, composite;
};
CompositionResult compose_homs(const Multipartition& lambda, const Multipartition& rho,
                               const Multipartition& mu, const ResidueData& rd,
                               const HomOptions& opts = {});

struct SliceResult {
    std::vector<CPCertificate> slice_certs;  // in slice order, slice-local data
    std::vector<int> y_letters;              // global letters of theta
    std::vector<int> i_seq;                  // global residues of n+1..n+gamma
    Tableau tnu_lambda, tnu_mu;              // global anchors
    HomMap hom;
};
SliceResult slice_hom(const Multipartition& lambda, const Multipartition& mu,
                      const std::vector<RowIndex>& cuts, const ResidueData& rd,
                      const HomOptions& opts = {});

// row slices and their induced residue data
struct SlicePiece {
    Multipartition part;
    ResidueData rd;
    int comp_offset = 0;  // first global component of the slice
    int row_offset = 0;   // rows skipped in that component
};
std::vector<SlicePiece> row_slices(const Multipartition& mp, const std::vector<RowIndex>& cuts,
                                   const ResidueData& rd);

bool verify_is_hom(const HomMap& h, const ResidueData& rd, std::string* why = nullptr);

}  // namespace klrs
