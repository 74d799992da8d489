#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "lieframe/bertrand.hpp"
#include "lieframe/frenet.hpp"
#include "lieframe/indicatrix.hpp"
#include "lieframe/verify.hpp"

namespace lieframe {

/// 17 significant digits; "nan" for non-finite values.
std::string format_real(double v);

// Column order: s,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,tau,tauG,H,sigma,sigma_defined
void write_apparatus_csv(std::ostream& out, const ApparatusField& app);
void write_apparatus_json(std::ostream& out, const ApparatusField& app);

void write_classification_json(std::ostream& out, const HelixClass& c, double tol,
                               const std::optional<bool>& matches_expectation = std::nullopt);
void write_classification_csv(std::ostream& out, const HelixClass& c, double tol);

// Column order: s,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,kappa_signed,tau,tauG,H,
// s_of_sstar,ds_dsstar,gamma,rho,lambda,pair_residual,singular
void write_mate_csv(std::ostream& out, const BertrandReport& report, const MateApparatus& mate);
void write_bertrand_json(std::ostream& out, const BertrandReport& report, const MateApparatus* mate,
                         const std::optional<bool>& matches_expectation = std::nullopt);

// Column order: s,x1,x2,x3,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,twist,s_rate,s_signed,s_ind,gamma,singular
void write_indicatrix_csv(std::ostream& out, const IndicatrixApparatus& ind);
void write_indicatrix_json(std::ostream& out, const IndicatrixApparatus& ind);

// Column order: kind,s,x1,x2,x3,singular
void write_sphere_header(std::ostream& out);
void write_sphere_rows(std::ostream& out, const IndicatrixApparatus& ind);

void write_bundle_json(std::ostream& out, const VerificationBundle& bundle);
// Column order: group,id,verdict,max_abs,mean_abs,quantile95,n_compared,n_flagged,tolerance,mode,sign,negative_control
void write_bundle_csv(std::ostream& out, const VerificationBundle& bundle);
/// Fixed-width per-equation summary for terminals.
void write_bundle_table(std::ostream& out, const VerificationBundle& bundle);

}  // namespace lieframe
