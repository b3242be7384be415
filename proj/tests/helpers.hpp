#pragma once

// Small builders shared by the test suites.

#include <string>
#include <vector>

#include "locreg/presentation.hpp"

namespace testutil {

inline locreg::RationalField QQ;

using QPoly = locreg::Poly<locreg::RationalField>;
using QRing = locreg::LocalRingPres<locreg::RationalField>;
using QIdeal = locreg::IdealPres<locreg::RationalField>;
using QMap = locreg::LocalMapPres<locreg::RationalField>;

inline QPoly qp(int nvars, const std::vector<std::pair<std::vector<int>, int>>& terms) {
    QPoly p(QQ, nvars);
    for (const auto& [e, c] : terms)
        p.add_term(locreg::Monomial{std::vector<int>(e)}, QQ.from_int(c));
    return p;
}

inline QPoly qvar(int nvars, int i) { return QPoly::variable(QQ, nvars, i); }

inline QRing qring(const std::vector<std::string>& vars,
                   const std::vector<QPoly>& relations, int trunc = 6) {
    return locreg::make_ring(QQ, vars, std::vector<QPoly>(relations), trunc);
}

}  // namespace testutil
