#pragma once

#include <array>

// Transcribed printed tables. Periodic tables are indexed [q][p] for
// 0 <= p,q <= 7. Multiplication tables keep the printed header row and
// column (cell [0][0] is empty); "g013" stands for gamma_0 gamma_1 gamma_3.

namespace cliffork::printed {

using Table = std::array<std::array<const char*, 8>, 8>;

// Distribution of the real algebras.
inline const Table kRings{{
    {{"R", "2R", "R(2)", "C(2)", "H(2)", "2H(2)", "H(4)", "C(8)"}},
    {{"C", "R(2)", "2R(2)", "R(4)", "C(4)", "H(4)", "2H(4)", "H(8)"}},
    {{"H", "C(2)", "R(4)", "2R(4)", "R(8)", "C(8)", "H(8)", "2H(8)"}},
    {{"2H", "H(2)", "C(4)", "R(8)", "2R(8)", "R(16)", "C(16)", "H(16)"}},
    {{"H(2)", "2H(2)", "H(4)", "C(8)", "R(16)", "2R(16)", "R(32)", "C(32)"}},
    {{"C(4)", "H(4)", "2H(4)", "H(8)", "C(16)", "R(32)", "2R(32)", "R(64)"}},
    {{"R(8)", "C(8)", "H(8)", "2H(8)", "H(16)", "C(32)", "R(64)", "2R(64)"}},
    {{"2R(8)", "R(16)", "C(16)", "H(16)", "2H(16)", "H(32)", "C(64)", "R(128)"}},
}};

// Finite group structure.
inline const Table kSalingaros{{
    {{"N1", "Omega0", "N1", "S1", "N4", "Omega4", "N6", "S3"}},
    {{"S0", "N1", "Omega1", "N3", "S2", "N6", "Omega6", "N8"}},
    {{"N2", "S1", "N3", "Omega3", "N5", "S3", "N8", "Omega8"}},
    {{"Omega2", "N4", "S2", "N5", "Omega5", "N7", "S4", "N10"}},
    {{"N4", "Omega4", "N6", "S3", "N7", "Omega7", "N9", "S5"}},
    {{"S2", "N6", "Omega6", "N8", "S4", "N9", "Omega9", "N11"}},
    {{"N5", "S3", "N8", "Omega8", "N10", "S5", "N11", "Omega11"}},
    {{"Omega5", "N7", "S4", "N10", "Omega10", "N12", "S6", "N13"}},
}};

// Real representations of the pin groups.
inline const Table kRepresentations{{
    {{"R^0_0", "2R^0_0", "R^2_1", "C^3_1", "H^4_1", "2H^4_1", "H^6_2", "C^7_4"}},
    {{"C^7_0", "R^0_1", "2R^0_1", "R^2_2", "C^3_2", "H^4_2", "2H^4_2", "H^6_4"}},
    {{"H^6_0", "C^7_1", "R^0_2", "2R^0_2", "R^2_4", "C^3_4", "H^4_4", "2H^4_4"}},
    {{"2H^4_0", "H^6_1", "C^7_2", "R^0_4", "2R^0_4", "R^2_8", "C^3_8", "H^4_8"}},
    {{"H^4_1", "2H^4_1", "H^6_2", "C^7_4", "R^0_8", "2R^0_8", "R^2_16", "C^3_16"}},
    {{"C^3_2", "H^4_2", "2H^4_2", "H^6_4", "C^7_8", "R^0_16", "2R^0_16", "R^2_32"}},
    {{"R^2_4", "C^3_4", "H^4_4", "2H^4_4", "H^6_8", "C^7_16", "R^0_32", "2R^0_32"}},
    {{"2R^0_4", "R^2_8", "C^3_8", "H^4_8", "2H^4_8", "H^6_16", "C^7_32", "R^0_64"}},
}};

// Quotient representations of the pin groups.
inline const Table kQuotient{{
    {{"R^0_0", "eR^0_0", "R^2_1", "C^3_1", "H^4_1", "eH^4_1", "H^6_2", "C^7_4"}},
    {{"C^7_0", "R^0_1", "eR^0_1", "R^2_2", "C^3_2", "H^4_2", "eH^4_2", "H^6_4"}},
    {{"H^6_0", "C^7_1", "R^0_2", "eR^0_2", "R^2_4", "C^3_4", "H^4_4", "eH^4_4"}},
    {{"eH^4_0", "H^6_1", "C^7_2", "R^0_4", "eR^0_4", "R^2_8", "C^3_8", "H^4_8"}},
    {{"H^4_1", "eH^4_1", "H^6_2", "C^7_4", "R^0_8", "eR^0_8", "R^2_16", "C^3_16"}},
    {{"C^3_2", "H^4_2", "eH^4_2", "H^6_4", "C^7_8", "R^0_16", "eR^0_16", "R^2_32"}},
    {{"R^2_4", "C^3_4", "H^4_4", "eH^4_4", "H^6_8", "C^7_16", "R^0_32", "eR^0_32"}},
    {{"eR^0_4", "R^2_8", "C^3_8", "H^4_8", "eH^4_8", "H^6_16", "C^7_32", "R^0_64"}},
}};

// CPT group of the Dirac algebra in gamma labels.
inline const std::array<std::array<const char*, 9>, 9> kDiracGammaTable{{
    {{"", "1", "g0", "g13", "g013", "g20", "g2", "g2013", "g213"}},
    {{"1", "1", "g0", "g13", "g013", "g2", "g2", "g2013", "g213"}},
    {{"g0", "g0", "1", "g013", "g13", "-g2", "-g20", "-g213", "-g2013"}},
    {{"g13", "g13", "g013", "-1", "-g0", "g2013", "g213", "-g20", "-g2"}},
    {{"g013", "g013", "g13", "-g0", "-1", "-g213", "-g2013", "g2", "g20"}},
    {{"g20", "g20", "g2", "g2013", "g213", "1", "g0", "g13", "g013"}},
    {{"g2", "g2", "g20", "g213", "g2013", "-g0", "-1", "-g013", "-g13"}},
    {{"g2013", "g2013", "g213", "-g20", "g2", "g13", "g013", "-1", "-g0"}},
    {{"g213", "g213", "g2013", "-g2", "-g20", "-g013", "-g13", "g0", "1"}},
}};

// Same table in P/T/C labels.
inline const std::array<std::array<const char*, 9>, 9> kDiracSymbolTable{{
    {{"", "1", "P", "T", "PT", "C", "CP", "CT", "CPT"}},
    {{"1", "1", "P", "T", "PT", "C", "CP", "CT", "CPT"}},
    {{"P", "P", "1", "PT", "T", "-CP", "-C", "-CPT", "-CT"}},
    {{"T", "T", "PT", "-1", "-P", "CT", "CPT", "-C", "-CP"}},
    {{"PT", "PT", "T", "-P", "-1", "-CPT", "-CT", "CP", "C"}},
    {{"C", "C", "CP", "CT", "CPT", "1", "P", "T", "PT"}},
    {{"CP", "CP", "C", "CPT", "CT", "-P", "-1", "-PT", "-T"}},
    {{"CT", "CT", "CPT", "-C", "CP", "T", "PT", "-1", "-P"}},
    {{"CPT", "CPT", "CT", "-CP", "-C", "-PT", "-T", "P", "1"}},
}};

// Extended automorphism group of the spacetime algebra in gamma labels.
inline const std::array<std::array<const char*, 9>, 9> kExtGammaTable{{
    {{"", "I", "g0123", "g13", "g02", "g013", "g2", "g0", "g123"}},
    {{"I", "I", "g0123", "g13", "g02", "g013", "g2", "g0", "g123"}},
    {{"g0123", "g0123", "-I", "g02", "-g012", "-g2", "g013", "-g123", "g0"}},
    {{"g13", "g13", "g02", "-I", "-g0123", "-g0", "-g123", "g013", "g2"}},
    {{"g02", "g02", "-g13", "-g0123", "I", "g123", "-g0", "-g2", "g013"}},
    {{"g013", "g013", "g2", "-g0", "-g123", "-I", "-g0123", "g13", "g02"}},
    {{"g2", "g2", "-g013", "-g123", "g0", "g0123", "-I", "-g02", "g13"}},
    {{"g0", "g0", "g123", "g013", "g2", "g13", "g02", "I", "g0123"}},
    {{"g123", "g123", "-g0", "g2", "-g013", "-g02", "g13", "-g0123", "I"}},
}};

// Same table in I/W/E/C/Pi/K/S/F labels.
inline const std::array<std::array<const char*, 9>, 9> kExtSymbolTable{{
    {{"", "I", "W", "E", "C", "Pi", "K", "S", "F"}},
    {{"I", "I", "W", "E", "C", "Pi", "K", "S", "F"}},
    {{"W", "W", "-I", "C", "-Pi", "-K", "Pi", "-F", "S"}},
    {{"E", "E", "C", "-I", "-W", "-S", "-F", "Pi", "K"}},
    {{"C", "C", "-E", "-W", "I", "F", "-S", "-K", "Pi"}},
    {{"Pi", "Pi", "K", "-S", "-F", "-I", "-W", "E", "C"}},
    {{"K", "K", "-Pi", "-F", "S", "W", "-I", "-C", "E"}},
    {{"S", "S", "F", "Pi", "K", "E", "C", "I", "W"}},
    {{"F", "F", "-S", "K", "-Pi", "-C", "E", "-W", "I"}},
}};

}  // namespace cliffork::printed
