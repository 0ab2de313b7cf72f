#include "wpd2d/utilities.hpp"

#include <cmath>

#include "wpd2d/energy_trading.hpp"
#include "wpd2d/secrecy.hpp"

namespace wpd2d {

double payment(const ChannelRealization& chan, double theta, double lambda_price,
               double p_bs) {
    return lambda_price * theta * p_bs * chan.h_norm2;
}

double leader_utility(const SystemParams& p, const ChannelRealization& chan,
                      double theta, double lambda_price, double p_bs) {
    const auto inner = energy_trading::inner_optima(p, chan, theta, p_bs);
    const secrecy::SecrecyPoint point{inner.p_s, p_bs, inner.rho_e, theta};
    return p.mu * secrecy::secrecy_throughput(p, chan, point) -
           payment(chan, theta, lambda_price, p_bs);
}

double bs_utility(const SystemParams& p, const ChannelRealization& chan,
                  double theta, double lambda_price, double p_bs) {
    const double cost = p.cost_a * p_bs * p_bs + p.cost_b * p_bs;
    return payment(chan, theta, lambda_price, p_bs) - theta * cost;
}

double welfare_utility(const SystemParams& p, const ChannelRealization& chan,
                       double theta, double p_bs) {
    const auto inner = energy_trading::inner_optima(p, chan, theta, p_bs);
    const secrecy::SecrecyPoint point{inner.p_s, p_bs, inner.rho_e, theta};
    const double cost = p.cost_a * p_bs * p_bs + p.cost_b * p_bs;
    return p.mu * secrecy::secrecy_throughput(p, chan, point) - theta * cost;
}

EquilibriumPoint assemble_point(const SystemParams& p, const ChannelRealization& chan,
                                Scheme scheme, double theta, double lambda_price,
                                double p_bs) {
    const auto inner = energy_trading::inner_optima(p, chan, theta, p_bs);

    EquilibriumPoint pt;
    pt.scheme_tag = scheme;
    pt.theta = theta;
    pt.lambda_price = lambda_price;
    pt.p_bs = p_bs;
    pt.p_s = inner.p_s;
    pt.rho_e = inner.rho_e;
    pt.payment = payment(chan, theta, lambda_price, p_bs);
    pt.u_leader = leader_utility(p, chan, theta, lambda_price, p_bs);
    pt.u_bs = bs_utility(p, chan, theta, lambda_price, p_bs);
    pt.diagnostics.welfare = welfare_utility(p, chan, theta, p_bs);
    pt.diagnostics.negative_leader_utility = pt.u_leader < 0.0;
    if (p_bs > 0.0 && inner.p_s > 0.0 && inner.rho_e > 0.0) {
        const double out = secrecy::outage_closed_form(p, inner.p_s, p_bs, inner.rho_e);
        pt.diagnostics.outage_gap = std::abs(out - p.eps_outage);
    }
    return pt;
}

}  // namespace wpd2d
