#include "fuchs/spectral_types.hpp"

#include "fuchs/error.hpp"

#include <algorithm>
#include <cctype>

namespace fuchs {

bool canonical_before(const Part& a, const Part& b)
{
    if (a.mult != b.mult)
        return a.mult > b.mult;
    if (a.label && b.label)
        return lex_less(*a.label, *b.label);
    return a.label.has_value() && !b.label.has_value();
}

void canonical_sort(Column& c) { std::stable_sort(c.begin(), c.end(), canonical_before); }

int column_total(const Column& c)
{
    int t = 0;
    for (const auto& p : c)
        t += p.mult;
    return t;
}

void prune_and_sort(std::vector<Column>& columns)
{
    for (auto& c : columns) {
        std::erase_if(c, [](const Part& p) { return p.mult == 0; });
        canonical_sort(c);
    }
}

void canonicalize(RiemannScheme& s) { prune_and_sort(s.columns); }

PartitionTuple spectral_type(const RiemannScheme& s)
{
    PartitionTuple m;
    for (const auto& c : s.columns) {
        Column stripped;
        for (const auto& p : c)
            stripped.push_back({std::nullopt, p.mult});
        canonical_sort(stripped);
        m.columns.push_back(std::move(stripped));
    }
    return m;
}

PartitionTuple parse_spectral_type(std::string_view text)
{
    PartitionTuple m;
    Column current;
    bool any = false;
    auto bad = [&] { throw Error(ErrorKind::Parse, "malformed spectral type '" + std::string(text) + "'"); };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == ',') {
            if (current.empty())
                bad();
            m.columns.push_back(std::move(current));
            current.clear();
        } else if (c == '(') {
            auto close = text.find(')', i);
            if (close == std::string_view::npos || close == i + 1)
                bad();
            int v = 0;
            for (std::size_t k = i + 1; k < close; ++k) {
                if (!std::isdigit(static_cast<unsigned char>(text[k])))
                    bad();
                v = v * 10 + (text[k] - '0');
            }
            current.push_back({std::nullopt, v});
            i = close;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            current.push_back({std::nullopt, c - '0'});
        } else {
            bad();
        }
        any = true;
    }
    if (!any || current.empty())
        bad();
    m.columns.push_back(std::move(current));
    for (auto& col : m.columns)
        canonical_sort(col);
    return m;
}

std::string format_spectral_type(const PartitionTuple& m)
{
    std::string out;
    for (std::size_t j = 0; j < m.columns.size(); ++j) {
        if (j)
            out += ',';
        Column c = m.columns[j];
        canonical_sort(c);
        for (const auto& p : c)
            out += p.mult < 10 ? std::to_string(p.mult) : "(" + std::to_string(p.mult) + ")";
    }
    return out;
}

std::string format_column(const Column& c)
{
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k)
            out += ' ';
        out += '[' + (c[k].label ? c[k].label->str() : std::string("?")) + "]_" + std::to_string(c[k].mult);
    }
    return out;
}

std::string format_scheme(const RiemannScheme& s)
{
    std::string out = "{inf: " + (s.columns.empty() ? std::string() : format_column(s.columns[0]));
    for (std::size_t j = 1; j < s.columns.size(); ++j) {
        out += "; ";
        out += j - 1 < s.poles.size() ? s.poles[j - 1].str() : std::string("?");
        out += ": " + format_column(s.columns[j]);
    }
    return out + "}";
}

} // namespace fuchs
