#include "cimod/fixtures.hpp"

namespace cimod {

std::string ExpectedDifference::label() const
{
    const unsigned mu = s - lambda;
    return "m(d_{" + std::to_string(lambda + 1) + "," + std::to_string(mu - 1) + "})-m(d_{" +
           std::to_string(lambda) + "," + std::to_string(mu) + "})";
}

std::vector<std::pair<std::string, std::string>> FixtureSet::expected() const
{
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("d", d);
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.emplace_back("s" + std::to_string(i + 1), s[i]);
    }
    out.emplace_back("m(A)", m_a);
    out.emplace_back("m(B)", m_b);
    for (const auto& diff : differences) {
        out.emplace_back(diff.label(), diff.value);
    }
    return out;
}

const FixtureSet& fixture_ci6()
{
    static const FixtureSet f{
        "ci6",
        6,
        Multidegree::make({2323, 2241, 2231, 2117, 2079, 1957, 1953, 1899}),
        Multidegree::make({2321, 2263, 2187, 2163, 2037, 2001, 1919, 1909}),
        "371008634983489635445991601",
        {"16800", "35449960", "75160663200", "160103709636808", "342612368928228000",
         "736443048260836419880"},
        "4639611966677972182663146217041064938",
        "4639610187986885926979324513081980800",
        {
            {0, 1, "1778691086255683821703959084138"},
            {1, 2, "4499576565311886952937393989311636807018493942453"},
            {0, 2, "4499576565312040117972354794044912596557706541183"},
        },
        {},
        "10^65",
        "1" + std::string(65, '0'),
    };
    return f;
}

const FixtureSet& fixture_ci7()
{
    static const FixtureSet f{
        "ci7",
        7,
        Multidegree::make({608, 592, 572, 516, 500, 453, 450, 424, 423, 408, 396, 366, 339, 312, 309}),
        Multidegree::make({604, 600, 564, 528, 488, 456, 452, 429, 416, 412, 387, 375, 333, 318, 306}),
        "3753247176539885786786848165802803200000",
        {"6668", "3094964", "1495641932", "749415139508", "387496273524068", "205753667680942844",
         "111680899229310068732"},
        "44406795197386326965368167342722355968367",
        "44384030917398245056066270542147363962375",
        {
            {0, 1, "22764279988081909301896800574992005992"},
            {1, 2, "33455700664468562980578980033713637615501603407170478458745"},
            {0, 2, "33455700663954152769609839164207754699356499185723378335507"},
        },
        {{2, 28}, {3, 13}, {5, 5}, {11, 2}, {13, 2}, {17, 1}, {19, 1}, {37, 1},
         {43, 1}, {47, 1}, {53, 1}, {61, 1}, {103, 1}, {113, 1}, {151, 1}},
        "3x10^76",
        "3" + std::string(76, '0'),
    };
    return f;
}

const std::vector<const FixtureSet*>& all_fixtures()
{
    static const std::vector<const FixtureSet*> all{&fixture_ci6(), &fixture_ci7()};
    return all;
}

const FixtureSet* find_fixture(std::string_view name)
{
    for (const FixtureSet* f : all_fixtures()) {
        if (f->name == name) {
            return f;
        }
    }
    return nullptr;
}

} // namespace cimod
