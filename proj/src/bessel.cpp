#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "abscat/errors.hpp"
#include "abscat/specfun.hpp"

namespace abscat
{
namespace
{
constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double tiny = 1e-300;
constexpr double temme_switch = 2.0;

// Taylor coefficients c_k of 1/Gamma(z) = sum_k c_k z^k, k = 1..26
constexpr std::array<double, 26> inv_gamma_coeff = {
    1.0,
    0.5772156649015328606065121,
    -0.6558780715202538810770195,
    -0.0420026350340952355290039,
    0.1665386113822914895017008,
    -0.0421977345555443367482083,
    -0.0096219715278769735621149,
    0.0072189432466630995423950,
    -0.0011651675918590651121139,
    -0.0002152416741149509728157,
    0.0001280502823881161861531,
    -0.0000201348547807882386557,
    -0.0000012504934821426706573,
    0.0000011330272319816958824,
    -0.0000002056338416977607103,
    0.0000000061160951044814158,
    0.0000000050020076444692229,
    -0.0000000011812745704870201,
    0.0000000001043426711691101,
    0.0000000000077822634399051,
    -0.0000000000036968056186422,
    0.0000000000005100370287454,
    -0.0000000000000205832605357,
    -0.0000000000000053481225394,
    0.0000000000000012267786282,
    -0.0000000000000001181259302,
};

struct TemmeGammas
{
    double gam1;  // (1/G(1-mu) - 1/G(1+mu)) / (2 mu)
    double gam2;  // (1/G(1-mu) + 1/G(1+mu)) / 2
    double gampl;  // 1/G(1+mu)
    double gammi;  // 1/G(1-mu)
};

// |mu| <= 1/2; the even/odd split avoids cancellation in gam1
TemmeGammas temme_gammas(double mu)
{
    // 1/G(1+x) = sum_j c_{j+1} x^j
    double even = 0;
    double odd = 0;
    double const mu2 = mu * mu;
    for (int j = static_cast<int>(inv_gamma_coeff.size()) - 1; j >= 0; --j)
    {
        double const c = inv_gamma_coeff[static_cast<std::size_t>(j)];
        if (j % 2 == 0)
        {
            even = even * mu2 + c;
        }
        else
        {
            odd = odd * mu2 + c;
        }
    }
    // even = sum_k t[2k] mu^2k, odd = sum_k t[2k+1] mu^2k for table t
    TemmeGammas g;
    g.gam2 = even;
    g.gam1 = -odd;
    g.gampl = even + mu * odd;
    g.gammi = even - mu * odd;
    return g;
}

void check_domain(double nu, double x)
{
    if (!(nu >= 0) || !std::isfinite(nu))
    {
        throw DomainError("Bessel order must be finite and nonnegative, got "
                          + std::to_string(nu));
    }
    if (!(x > 0) || !std::isfinite(x))
    {
        throw DomainError("Bessel argument must be finite and positive, got "
                          + std::to_string(x));
    }
}
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Real-order J, Y via continued fractions.
 *
 * The ratio J'/J at nu comes from the CF1 continued fraction; downward
 * recurrence carries it to mu = nu - n with |mu| <= 1/2. There Y_mu, Y_mu+1
 * come from Temme's series (x < 2) or Steed's CF2 (x >= 2), and the
 * Wronskian fixes the normalisation of J. Upward recurrence for Y is
 * stable. The downward J recurrence is rescaled to avoid overflow when
 * nu >> x.
 */
BesselJY bessel_jy(double nu, double x)
{
    check_domain(nu, x);

    int const nl = x < temme_switch
                       ? static_cast<int>(nu + 0.5)
                       : std::max(0, static_cast<int>(nu - x + 1.5));
    double const mu = nu - nl;
    double const mu2 = mu * mu;
    double const xi = 1.0 / x;
    double const xi2 = 2.0 * xi;
    double const w = xi2 / pi;

    // CF1 for f = J'_nu / J_nu (modified Lentz)
    int const max_iter = 20000 + static_cast<int>(4 * x);
    int isign = 1;
    double h = nu * xi;
    if (h < tiny)
    {
        h = tiny;
    }
    double b = xi2 * nu;
    double d = 0;
    double c = h;
    int iter = 0;
    for (; iter < max_iter; ++iter)
    {
        b += xi2;
        d = b - d;
        if (std::abs(d) < tiny)
        {
            d = tiny;
        }
        c = b - 1.0 / c;
        if (std::abs(c) < tiny)
        {
            c = tiny;
        }
        d = 1.0 / d;
        double const del = c * d;
        h *= del;
        if (d < 0)
        {
            isign = -isign;
        }
        if (std::abs(del - 1.0) < eps)
        {
            break;
        }
    }
    if (iter == max_iter)
    {
        throw AccuracyError("bessel_jy: CF1 did not converge for x = "
                            + std::to_string(x));
    }

    // Downward recurrence from nu to mu with unnormalised values
    double rjl = isign;
    double rjpl = h * rjl;
    double const rjl1 = rjl;
    double const rjp1 = rjpl;
    double fact = nu * xi;
    int rescale = 0;
    constexpr int rescale_bits = 600;
    double const big = std::ldexp(1.0, rescale_bits);
    for (int l = nl; l >= 1; --l)
    {
        double const rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if (std::abs(rjl) > big)
        {
            rjl = std::ldexp(rjl, -rescale_bits);
            rjpl = std::ldexp(rjpl, -rescale_bits);
            ++rescale;
        }
    }
    if (rjl == 0)
    {
        rjl = eps;
    }
    double const f = rjpl / rjl;

    double rjmu = 0;
    double rymu = 0;
    double rymup = 0;
    double ry1 = 0;
    if (x < temme_switch)
    {
        double const x2 = 0.5 * x;
        double const pimu = pi * mu;
        double const fact1 = std::abs(pimu) < eps ? 1.0
                                                  : pimu / std::sin(pimu);
        double const dd = -std::log(x2);
        double e = mu * dd;
        double const fact2 = std::abs(e) < eps ? 1.0 : std::sinh(e) / e;
        auto const g = temme_gammas(mu);
        double ff = 2.0 / pi * fact1
                    * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * dd);
        e = std::exp(e);
        double p = e / (g.gampl * pi);
        double q = 1.0 / (e * pi * g.gammi);
        double const pimu2 = 0.5 * pimu;
        double const fact3 = std::abs(pimu2) < eps ? 1.0
                                                   : std::sin(pimu2) / pimu2;
        double const r = pi * pimu2 * fact3 * fact3;
        double cc = 1.0;
        double const dx = -x2 * x2;
        double sum = ff + r * q;
        double sum1 = p;
        int i = 1;
        for (; i < 1000; ++i)
        {
            ff = (i * ff + p + q) / (i * i - mu2);
            cc *= dx / i;
            p /= (i - mu);
            q /= (i + mu);
            double const del = cc * (ff + r * q);
            sum += del;
            double const del1 = cc * p - i * del;
            sum1 += del1;
            if (std::abs(del) < (1.0 + std::abs(sum)) * eps)
            {
                break;
            }
        }
        if (i == 1000)
        {
            throw AccuracyError("bessel_jy: Temme series did not converge");
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        rymup = mu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    }
    else
    {
        // Steed's CF2 for p + iq = (J' + iY') / (J + iY) at order mu
        double a = 0.25 - mu2;
        double p = -0.5 * xi;
        double q = 1.0;
        double const br = 2.0 * x;
        double bi = 2.0;
        double fct = a * xi / (p * p + q * q);
        double cr = br + q * fct;
        double ci = bi + p * fct;
        double den = br * br + bi * bi;
        double dr = br / den;
        double di = -bi / den;
        double dlr = cr * dr - ci * di;
        double dli = cr * di + ci * dr;
        double temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        int i = 2;
        for (; i < max_iter; ++i)
        {
            a += 2 * (i - 1);
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if (std::abs(dr) + std::abs(di) < tiny)
            {
                dr = tiny;
            }
            fct = a / (cr * cr + ci * ci);
            cr = br + cr * fct;
            ci = bi - ci * fct;
            if (std::abs(cr) + std::abs(ci) < tiny)
            {
                cr = tiny;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (std::abs(dlr - 1.0) + std::abs(dli) < eps)
            {
                break;
            }
        }
        if (i == max_iter)
        {
            throw AccuracyError("bessel_jy: CF2 did not converge");
        }
        double const gam = (p - f) / q;
        rjmu = std::sqrt(w / ((p - f) * gam + q));
        rjmu = std::copysign(rjmu, rjl);
        rymu = rjmu * gam;
        rymup = rymu * (p + q / gam);
        ry1 = mu * xi * rymu - rymup;
    }

    double const scale = rjmu / rjl;
    BesselJY out;
    out.j = std::ldexp(rjl1 * scale, -rescale_bits * rescale);
    out.jp = std::ldexp(rjp1 * scale, -rescale_bits * rescale);
    for (int i = 1; i <= nl; ++i)
    {
        double const rytemp = (mu + i) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    out.y = rymu;
    out.yp = nu * xi * rymu - ry1;
    return out;
}

double bessel_j(double nu, double x)
{
    return bessel_jy(nu, x).j;
}

double bessel_y(double nu, double x)
{
    return bessel_jy(nu, x).y;
}

Complex hankel1(double nu, double x)
{
    auto const jy = bessel_jy(nu, x);
    return {jy.j, jy.y};
}
}  // namespace abscat
