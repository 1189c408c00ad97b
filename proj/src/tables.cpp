#include "isotonic/tables.hpp"

namespace isotonic::tables {

namespace {

constexpr std::array<Column, 5> spin_columns{{
    {0.0, 0.5, {2.5509860, 3.7292142, 4.7223578, 5.6093599, 6.4244044, 7.1861562, 7.9061955, 8.5923225,
                9.2501029, 9.8836823, 10.4962522}},
    {0.0, 2.0, {3.1503636, 4.2915849, 5.2667833, 6.1428129, 6.9503157, 7.7065008, 8.4222280, 9.1048960,
                9.7598277, 10.3910117, 11.0015335}},
    {0.0, 6.0, {4.0959121, 5.1735045, 6.1147629, 6.9690531, 7.7611866, 8.5058073, 9.2124501, 9.8877527,
                10.5365663, 11.1625702, 11.7686371}},
    {2.0, 2.0, {3.3991120, 4.6747397, 5.7095838, 6.6208542, 7.4521361, 8.2256717, 8.9547327, 9.6480343,
                10.3116853, 10.9501754, 11.5669263}},
    {2.0, 6.0, {4.2634174, 5.4772542, 6.4867680, 7.3835758, 8.2052891, 8.9719327, 9.6957461, 10.3848919,
                11.0451537, 11.6808166, 12.2951658}},
}};

// Column layout as printed: C_ps = -13 carries only g = 2 and g = 6.
constexpr std::array<Column, 8> pseudospin_columns{{
    {0.0, 0.5, {1.7353829, 2.9274128, 3.9414440, 4.8433785, 5.6693464, 6.4394382, 7.1660777, 7.8575782,
                8.5198335, 9.1572079, 9.7730448}},
    {0.0, 2.0, {1.9975105, 3.2918405, 4.3370543, 5.2545579, 6.0900511, 6.8666546, 7.5980685, 8.2932428,
                8.9584266, 9.5981991, 10.2160418}},
    {0.0, 6.0, {2.6220370, 3.9528022, 5.0071893, 5.9290480, 6.7671403, 7.5454937, 8.2781774, 8.9743213,
                9.6402732, 10.2806717, 10.8990360}},
    {-2.0, 0.5, {0.8996794, 2.1870188, 3.2260195, 4.1395244, 4.9722337, 5.7467734, 6.4765859, 7.1704749,
                 7.8345997, 8.4734818, 9.0905633}},
    {-2.0, 2.0, {1.3991120, 2.6747397, 3.7095838, 4.6208542, 5.4521361, 6.2256717, 6.9547326, 7.6480344,
                 8.3116853, 8.9501754, 9.5669262}},
    {-2.0, 6.0, {2.2634174, 3.4772541, 4.4867680, 5.3835758, 6.2052891, 6.9719327, 7.6957461, 8.3848919,
                 9.0451537, 9.6808166, 10.2951658}},
    {-13.0, 2.0, {0.8228652, 1.5785297, 2.2966386, 2.9834157, 3.6435022, 4.2804724, 4.8971501, 5.4958138,
                  6.0783346, 6.6462725, 7.2009446}},
    {-13.0, 6.0, {1.8370383, 2.5680523, 3.2659358, 3.9357442, 4.5813401, 5.2057558, 5.8114252, 6.4003383,
                  6.9741474, 7.5342431, 8.0818094}},
}};

}  // namespace

std::span<const Column> spin_table() { return spin_columns; }
std::span<const Column> pseudospin_table() { return pseudospin_columns; }

}  // namespace isotonic::tables
