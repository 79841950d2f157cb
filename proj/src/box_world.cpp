#include "boxlab/box_world.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

namespace boxlab::box {

std::pair<std::size_t, std::size_t> parse_key(std::string_view key, std::size_t parties) {
    if (key.size() != 2 * parties + 1 || key[parties] != '|') {
        throw std::invalid_argument("malformed behavior key '" + std::string(key) + "'");
    }
    std::size_t s = 0, o = 0;
    for (std::size_t k = 0; k < parties; ++k) {
        const char sc = key[k];
        const char oc = key[parties + 1 + k];
        if ((sc != 'U' && sc != 'D') || (oc != '+' && oc != '-')) {
            throw std::invalid_argument("malformed behavior key '" + std::string(key) + "'");
        }
        s = (s << 1) | (sc == 'D' ? 1u : 0u);
        o = (o << 1) | (oc == '-' ? 1u : 0u);
    }
    return {s, o};
}

std::string format_key(std::size_t setting, std::size_t outcome, std::size_t parties) {
    std::string key(2 * parties + 1, '|');
    for (std::size_t k = 0; k < parties; ++k) {
        const std::size_t bit = std::size_t{1} << (parties - 1 - k);
        key[k] = (setting & bit) ? 'D' : 'U';
        key[parties + 1 + k] = (outcome & bit) ? '-' : '+';
    }
    return key;
}

namespace detail {

std::string setting_label(std::size_t setting, std::size_t parties) {
    std::string out(parties, 'U');
    for (std::size_t k = 0; k < parties; ++k) {
        if (setting & (std::size_t{1} << (parties - 1 - k))) out[k] = 'D';
    }
    return out;
}

// e.g. party 0, others (U,D), outcomes (+,-): "P1:*UD|.+-"
std::string signaling_label(std::size_t party, std::size_t setting, std::size_t outcome,
                            std::size_t parties) {
    std::string key = format_key(setting, outcome, parties);
    key[party] = '*';
    key[parties + 1 + party] = '.';
    return "P" + std::to_string(party + 1) + ":" + key;
}

}  // namespace detail

std::string ValidationReport::to_csv() const {
    std::ostringstream os;
    os << "kind,label,residual,ok\n";
    char buf[64];
    for (const auto& d : details) {
        std::snprintf(buf, sizeof buf, "%.17g", d.residual);
        os << d.kind << ',' << d.label << ',' << buf << ',' << (d.ok ? "true" : "false") << '\n';
    }
    return os.str();
}

namespace {

SignPattern normalize_sign(SignPattern p) {
    if (p[0] < 0) {
        for (auto& v : p) v = -v;
    }
    return p;
}

std::size_t remap_setting(std::size_t s, const std::array<std::size_t, 3>& perm) {
    // new party k takes the setting of old party perm[k]
    std::size_t out = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        const bool bit = s & bit_of<3>(perm[k]);
        out = (out << 1) | (bit ? 1u : 0u);
    }
    return out;
}

}  // namespace

std::vector<SignPattern> svetlichny_family() {
    std::vector<std::function<SignPattern(const SignPattern&)>> moves;
    for (std::size_t party = 0; party < 3; ++party) {
        const std::size_t bit = bit_of<3>(party);
        moves.emplace_back([bit](const SignPattern& p) {
            SignPattern q{};
            for (std::size_t s = 0; s < 8; ++s) q[s ^ bit] = p[s];
            return q;
        });
        for (int which = 0; which < 2; ++which) {
            moves.emplace_back([bit, which](const SignPattern& p) {
                SignPattern q = p;
                for (std::size_t s = 0; s < 8; ++s) {
                    if (((s & bit) != 0) == (which == 1)) q[s] = -q[s];
                }
                return q;
            });
        }
    }
    for (const auto& perm : {std::array<std::size_t, 3>{1, 0, 2}, std::array<std::size_t, 3>{0, 2, 1}}) {
        moves.emplace_back([perm](const SignPattern& p) {
            SignPattern q{};
            for (std::size_t s = 0; s < 8; ++s) q[remap_setting(s, perm)] = p[s];
            return q;
        });
    }

    std::set<SignPattern> seen{normalize_sign(kSvetlichnyCanonical)};
    std::deque<SignPattern> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        const SignPattern p = queue.front();
        queue.pop_front();
        for (const auto& move : moves) {
            const SignPattern q = normalize_sign(move(p));
            if (seen.insert(q).second) queue.push_back(q);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

struct FixtureEntry {
    const char* key;
    std::int64_t num;
    std::int64_t den;
};

ExactDistribution from_entries(std::initializer_list<FixtureEntry> entries) {
    ExactDistribution d;
    for (const auto& e : entries) d[e.key] = Rational(e.num, e.den);
    return d;
}

}  // namespace

ExactDistribution fixture_distribution(FixtureId id) {
    switch (id) {
        case FixtureId::Set20:
            return from_entries({
                {"UUU|+++", 1, 2}, {"UUU|-+-", 1, 2}, {"UUD|++-", 1, 2}, {"UUD|-++", 1, 2},
                {"UDU|+-+", 1, 2}, {"UDU|---", 1, 2}, {"UDD|+--", 1, 2}, {"UDD|--+", 1, 2},
                {"DUU|++-", 1, 2}, {"DUU|-++", 1, 2}, {"DUD|++-", 1, 2}, {"DUD|-++", 1, 2},
                {"DDU|+--", 1, 2}, {"DDU|--+", 1, 2}, {"DDD|+--", 1, 2}, {"DDD|--+", 1, 2},
            });
        case FixtureId::Set21:
            return from_entries({
                {"UUU|+++", 1, 2}, {"UUU|--+", 1, 2}, {"UUD|++-", 1, 2}, {"UUD|---", 1, 2},
                {"UDU|+-+", 1, 2}, {"UDU|-++", 1, 2}, {"UDD|+--", 1, 2}, {"UDD|-+-", 1, 2},
                {"DUU|+-+", 1, 2}, {"DUU|-++", 1, 2}, {"DUD|+--", 1, 2}, {"DUD|-+-", 1, 2},
                {"DDU|+-+", 1, 2}, {"DDU|-++", 1, 2}, {"DDD|+--", 1, 2}, {"DDD|-+-", 1, 2},
            });
        case FixtureId::Set23:
            return from_entries({
                {"UUU|+++", 1, 3}, {"UUU|-+-", 1, 3}, {"UUU|--+", 1, 3},
                {"UUD|++-", 1, 3}, {"UUD|-++", 1, 3}, {"UUD|---", 1, 3},
                {"UDU|+-+", 1, 3}, {"UDU|-+-", 1, 3}, {"UDU|--+", 1, 3},
                {"UDD|+--", 1, 3}, {"UDD|-+-", 1, 3}, {"UDD|--+", 1, 3},
                {"DUU|+-+", 1, 3}, {"DUU|-++", 1, 3}, {"DUU|-+-", 1, 3},
                {"DUD|+--", 1, 3}, {"DUD|-++", 1, 3}, {"DUD|-+-", 1, 3},
                {"DDU|+-+", 1, 3}, {"DDU|-+-", 1, 3}, {"DDU|--+", 1, 3},
                {"DDD|+--", 1, 3}, {"DDD|-+-", 1, 3}, {"DDD|--+", 1, 3},
            });
        case FixtureId::SetC04:
            return from_entries({
                {"UUU|+++", 3, 5}, {"UUU|--+", 2, 5}, {"UUD|++-", 3, 5}, {"UUD|---", 2, 5},
                {"UDU|+-+", 3, 5}, {"UDU|-++", 2, 5}, {"UDD|+--", 3, 5}, {"UDD|-+-", 2, 5},
                {"DUU|+-+", 2, 5}, {"DUU|-++", 3, 5}, {"DUD|+--", 2, 5}, {"DUD|-+-", 3, 5},
                {"DDU|+-+", 2, 5}, {"DDU|-++", 2, 5}, {"DDU|--+", 1, 5},
                {"DDD|+--", 2, 5}, {"DDD|-+-", 2, 5}, {"DDD|---", 1, 5},
            });
    }
    throw std::invalid_argument("unknown fixture id");
}

FixtureId fixture_from_name(std::string_view name) {
    for (auto id : all_fixtures()) {
        if (fixture_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::string_view fixture_name(FixtureId id) {
    switch (id) {
        case FixtureId::Set20: return "set20";
        case FixtureId::Set21: return "set21";
        case FixtureId::Set23: return "set23";
        case FixtureId::SetC04: return "set_c04";
    }
    return "?";
}

std::vector<FixtureId> all_fixtures() {
    return {FixtureId::Set20, FixtureId::Set21, FixtureId::Set23, FixtureId::SetC04};
}

ExactDistribution deterministic_box(const std::array<int, 3>& responses) {
    ExactDistribution d;
    for (std::size_t s = 0; s < 8; ++s) {
        std::size_t o = 0;
        for (std::size_t k = 0; k < 3; ++k) {
            const int which = (s & bit_of<3>(k)) ? 1 : 0;
            o = (o << 1) | static_cast<std::size_t>((responses[k] >> which) & 1);
        }
        d.at(s, o) = Rational(1);
    }
    return d;
}

std::vector<ExactDistribution> all_deterministic_boxes() {
    std::vector<ExactDistribution> out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) out.push_back(deterministic_box({a, b, c}));
    return out;
}

}  // namespace boxlab::box
