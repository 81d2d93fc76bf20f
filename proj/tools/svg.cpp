#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cli.hpp"

namespace abscat::cli
{
namespace
{
std::string fmt(char const* pattern, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, x);
    return buf;
}

std::string escape(std::string const& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            default:
                out += c;
        }
    }
    return out;
}
}  // namespace

std::string svg_plot(std::vector<PlotSeries> const& series,
                     std::string const& title,
                     std::string const& x_label,
                     std::string const& y_label,
                     bool log_y)
{
    double const width = 760;
    double const height = 500;
    double const left = 80;
    double const right = 30;
    double const top = 40;
    double const bottom = 60;

    double x0 = INFINITY;
    double x1 = -INFINITY;
    double y0 = INFINITY;
    double y1 = -INFINITY;
    auto ty = [&](double y) { return log_y ? std::log10(y) : y; };
    for (auto const& s : series)
    {
        for (std::size_t i = 0; i < s.x.size(); ++i)
        {
            if (log_y && !(s.y[i] > 0))
            {
                continue;
            }
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, ty(s.y[i]));
            y1 = std::max(y1, ty(s.y[i]));
        }
    }
    if (!(x1 > x0))
    {
        x1 = x0 + 1;
    }
    if (log_y)
    {
        y0 = std::floor(y0);
        y1 = std::ceil(y1);
    }
    if (!(y1 > y0))
    {
        y1 = y0 + 1;
    }
    double const pw = width - left - right;
    double const ph = height - top - bottom;
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return top + (y1 - y) / (y1 - y0) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" font-family=\"sans-serif\" "
       << "font-size=\"12\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw
       << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i)
    {
        double const x = x0 + (x1 - x0) * i / 5;
        os << "<line x1=\"" << px(x) << "\" y1=\"" << top + ph << "\" x2=\""
           << px(x) << "\" y2=\"" << top + ph + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << px(x) << "\" y=\"" << top + ph + 20
           << "\" text-anchor=\"middle\">" << fmt("%.3g", x) << "</text>\n";
    }
    int const n_y = log_y ? static_cast<int>(y1 - y0) : 5;
    for (int i = 0; i <= n_y; ++i)
    {
        double const y = y0 + (y1 - y0) * i / n_y;
        std::string const label = log_y ? "1e" + fmt("%.0f", y) : fmt("%.3g", y);
        os << "<line x1=\"" << left - 5 << "\" y1=\"" << py(y) << "\" x2=\""
           << left << "\" y2=\"" << py(y) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << left - 8 << "\" y=\"" << py(y) + 4
           << "\" text-anchor=\"end\">" << label << "</text>\n";
    }

    os << "<text x=\"" << left + pw / 2 << "\" y=\"" << top - 15
       << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
       << "</text>\n";
    os << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 15
       << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
    os << "<text x=\"18\" y=\"" << top + ph / 2
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << top + ph / 2 << ")\">" << escape(y_label) << "</text>\n";

    int legend = 0;
    for (auto const& s : series)
    {
        os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\""
           << s.width << "\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
        {
            if (log_y && !(s.y[i] > 0))
            {
                continue;
            }
            os << fmt("%.2f", px(s.x[i])) << "," << fmt("%.2f", py(ty(s.y[i])))
               << " ";
        }
        os << "\"/>\n";
        double const ly = top + 18 + 18 * legend++;
        os << "<line x1=\"" << left + pw - 120 << "\" y1=\"" << ly << "\" x2=\""
           << left + pw - 90 << "\" y2=\"" << ly << "\" stroke=\"black\" "
           << "stroke-width=\"" << s.width << "\"/>\n";
        os << "<text x=\"" << left + pw - 84 << "\" y=\"" << ly + 4 << "\">"
           << escape(s.label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}
}  // namespace abscat::cli
