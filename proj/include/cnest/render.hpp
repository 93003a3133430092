#pragma once

#include <iomanip>

#include "cnest/growth.hpp"

namespace cnest {

enum class RenderFormat { ascii, svg, tikz };

inline RenderFormat render_format_from_string(const std::string& s) {
    if (s == "ascii") return RenderFormat::ascii;
    if (s == "svg") return RenderFormat::svg;
    if (s == "tikz") return RenderFormat::tikz;
    throw std::invalid_argument("unsupported format: " + s);
}

namespace detail {

/// Diagram line of a partition in the given order: labels left to right,
/// including the position 0 for type B nesting diagrams.
inline std::vector<int> diagram_line(Ctype t, int n, Order ord) {
    std::vector<int> line;
    for (int e = 1; e <= n; ++e) line.push_back(e);
    if (t == Ctype::A) return line;
    if (ord == Order::nesting) {
        if (t == Ctype::B) line.push_back(0);
        for (int e = n; e >= 1; --e) line.push_back(-e);
    } else {
        for (int e = 1; e <= n; ++e) line.push_back(-e);
    }
    return line;
}

}  // namespace detail

/// Deterministic plain-text diagram: one line of labels, then one line per
/// arc with '(' under the opener and ')' under the closer.
inline std::string render_partition_ascii(const SetPartition& p, Order ord) {
    const auto line = detail::diagram_line(p.ctype(), p.rank(), ord);
    std::size_t w = 1;
    for (int e : line) w = std::max(w, std::to_string(e).size());
    std::map<int, std::size_t> col;
    std::ostringstream head;
    for (std::size_t i = 0; i < line.size(); ++i) {
        col[line[i]] = i * (w + 1);
        std::string s = std::to_string(line[i]);
        head << s << std::string(w + 1 - s.size(), ' ');
    }
    std::string out = head.str();
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
    for (const Arc& a : arcs(p, ord)) {
        std::size_t x1 = col.at(a.opener), x2 = col.at(a.closer);
        if (x1 > x2) std::swap(x1, x2);
        std::string row(x2 + 1, ' ');
        row[x1] = '(';
        row[x2] = ')';
        for (std::size_t i = x1 + 1; i < x2; ++i) row[i] = '-';
        out += row + '\n';
    }
    return out;
}

inline std::string render_partition_svg(const SetPartition& p, Order ord) {
    const auto line = detail::diagram_line(p.ctype(), p.rank(), ord);
    const int step = 30, base = 40, height = 60;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)(line.size() + 1) * step
       << "\" height=\"" << height + 20 << "\">\n";
    os << "  <line x1=\"" << step / 2 << "\" y1=\"" << height << "\" x2=\""
       << (int)line.size() * step + step / 2 << "\" y2=\"" << height
       << "\" stroke=\"black\"/>\n";
    std::map<int, int> x;
    for (std::size_t i = 0; i < line.size(); ++i) {
        x[line[i]] = (int)(i + 1) * step;
        os << "  <text x=\"" << x[line[i]] << "\" y=\"" << height + 15
           << "\" text-anchor=\"middle\" font-size=\"12\">" << line[i] << "</text>\n";
    }
    for (const Arc& a : arcs(p, ord)) {
        int x1 = x.at(a.opener), x2 = x.at(a.closer);
        if (x1 > x2) std::swap(x1, x2);
        int lift = std::min(base, 8 + (x2 - x1) / 2);
        os << "  <path d=\"M " << x1 << ' ' << height - 5 << " Q " << (x1 + x2) / 2 << ' '
           << height - 5 - lift << ' ' << x2 << ' ' << height - 5
           << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

inline std::string render_partition_tikz(const SetPartition& p, Order ord) {
    const auto line = detail::diagram_line(p.ctype(), p.rank(), ord);
    std::ostringstream os;
    os << "\\begin{tikzpicture}[xscale=0.8]\n";
    std::map<int, int> x;
    for (std::size_t i = 0; i < line.size(); ++i) {
        x[line[i]] = (int)i;
        os << "  \\node at (" << i << ",0) {$" << line[i] << "$};\n";
    }
    for (const Arc& a : arcs(p, ord)) {
        int x1 = x.at(a.opener), x2 = x.at(a.closer);
        if (x1 > x2) std::swap(x1, x2);
        double lift = 0.3 + 0.25 * (x2 - x1);
        os << "  \\draw (" << x1 << ",0.25) .. controls (" << (x1 + x2) / 2.0 << ',' << lift
           << ") .. (" << x2 << ",0.25);\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

inline std::string render_partition(const SetPartition& p, Order ord, RenderFormat fmt) {
    switch (fmt) {
        case RenderFormat::ascii: return render_partition_ascii(p, ord);
        case RenderFormat::svg: return render_partition_svg(p, ord);
        case RenderFormat::tikz: return render_partition_tikz(p, ord);
    }
    throw std::invalid_argument("unsupported format");
}

/// Grid picture of a filling with crosses for ones (digits for larger
/// entries) and the staircase corner labels appended.
inline std::string render_filling_ascii(const Filling& f) {
    std::ostringstream os;
    os << (f.kind() == Order::nesting ? "nesting" : "crossing") << ' ' << f.n() << '\n';
    for (int y = 0; y < f.poly().rows(); ++y) {
        std::ostringstream row;
        row << std::setw(3) << f.poly().row_label(y) << " |";
        for (int c = 1; c <= f.n(); ++c) {
            if (!f.poly().exists(c, y)) {
                row << ' ';
                break;
            }
            int e = f.at(c, y);
            row << (e == 0 ? '.' : e == 1 ? 'X' : (char)('0' + std::min(e, 9)));
        }
        os << row.str() << '\n';
    }
    const BorderLabels b = semistandard_forward(f);
    os << "corners: ";
    for (std::size_t i = 0; i < b.staircase.size(); ++i) {
        if (i) os << ';';
        std::string s = shape_to_string(b.staircase[i]);
        os << (s.empty() ? "-" : s);
    }
    os << '\n';
    return os.str();
}

inline std::string render_filling_svg(const Filling& f) {
    const int cell = 24;
    std::ostringstream os;
    const int rows = f.poly().rows();
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (f.n() + 2) * cell
       << "\" height=\"" << (rows + 2) * cell << "\">\n";
    for (int y = 0; y < rows; ++y) {
        os << "  <text x=\"" << cell / 2 << "\" y=\"" << (y + 1) * cell + cell / 2
           << "\" font-size=\"10\" text-anchor=\"middle\">" << f.poly().row_label(y)
           << "</text>\n";
        for (int c = 1; c <= f.n(); ++c) {
            if (!f.poly().exists(c, y)) continue;
            os << "  <rect x=\"" << c * cell << "\" y=\"" << (y + 1) * cell << "\" width=\""
               << cell << "\" height=\"" << cell << "\" fill=\"none\" stroke=\"black\"/>\n";
            if (f.at(c, y))
                os << "  <text x=\"" << c * cell + cell / 2 << "\" y=\""
                   << (y + 1) * cell + cell / 2 + 4
                   << "\" font-size=\"12\" text-anchor=\"middle\">"
                   << (f.at(c, y) == 1 ? std::string("x") : std::to_string(f.at(c, y)))
                   << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

inline std::string render_filling(const Filling& f, RenderFormat fmt) {
    switch (fmt) {
        case RenderFormat::ascii: return render_filling_ascii(f);
        case RenderFormat::svg: return render_filling_svg(f);
        case RenderFormat::tikz: break;
    }
    throw std::invalid_argument("unsupported format for fillings");
}

}  // namespace cnest
