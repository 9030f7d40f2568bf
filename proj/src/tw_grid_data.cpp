// Embedded Tracy-Widom distribution table.  GENERATED FILE.
// Regenerate with:  make_tw_grid --emit-cpp > src/tw_grid_data.cpp
// (or `twroot grid-regen --out src/tw_grid_data.cpp`).
// Method: Fredholm-determinant quadrature, 120 Gauss-Legendre nodes
// under x = s + 10 tan(pi (xi+1)/4); grid [-10, 6] step 0.02.
#include "tw_grid_data.hpp"

namespace twroot::detail {

const double tw_grid_abscissae[tw_grid_knots] = {
    -10,
    -9.9800000000000004,
    -9.9600000000000009,
    -9.9399999999999995,
    -9.9199999999999999,
    -9.9000000000000004,
    -9.8800000000000008,
    -9.8599999999999994,
    -9.8399999999999999,
    -9.8200000000000003,
    -9.8000000000000007,
    -9.7799999999999994,
    -9.7599999999999998,
    -9.7400000000000002,
    -9.7200000000000006,
    -9.6999999999999993,
    -9.6799999999999997,
    -9.6600000000000001,
    -9.6400000000000006,
    -9.6199999999999992,
    -9.5999999999999996,
    -9.5800000000000001,
    -9.5600000000000005,
    -9.5399999999999991,
    -9.5199999999999996,
    -9.5,
    -9.4800000000000004,
    -9.4600000000000009,
    -9.4399999999999995,
    -9.4199999999999999,
    -9.4000000000000004,
    -9.3800000000000008,
    -9.3599999999999994,
    -9.3399999999999999,
    -9.3200000000000003,
    -9.3000000000000007,
    -9.2799999999999994,
    -9.2599999999999998,
    -9.2400000000000002,
    -9.2200000000000006,
    -9.1999999999999993,
    -9.1799999999999997,
    -9.1600000000000001,
    -9.1400000000000006,
    -9.1199999999999992,
    -9.0999999999999996,
    -9.0800000000000001,
    -9.0600000000000005,
    -9.0399999999999991,
    -9.0199999999999996,
    -9,
    -8.9800000000000004,
    -8.9600000000000009,
    -8.9399999999999995,
    -8.9199999999999999,
    -8.9000000000000004,
    -8.879999999999999,
    -8.8599999999999994,
    -8.8399999999999999,
    -8.8200000000000003,
    -8.8000000000000007,
    -8.7799999999999994,
    -8.7599999999999998,
    -8.7400000000000002,
    -8.7200000000000006,
    -8.6999999999999993,
    -8.6799999999999997,
    -8.6600000000000001,
    -8.6400000000000006,
    -8.6199999999999992,
    -8.5999999999999996,
    -8.5800000000000001,
    -8.5600000000000005,
    -8.5399999999999991,
    -8.5199999999999996,
    -8.5,
    -8.4800000000000004,
    -8.4600000000000009,
    -8.4399999999999995,
    -8.4199999999999999,
    -8.4000000000000004,
    -8.379999999999999,
    -8.3599999999999994,
    -8.3399999999999999,
    -8.3200000000000003,
    -8.3000000000000007,
    -8.2799999999999994,
    -8.2599999999999998,
    -8.2400000000000002,
    -8.2200000000000006,
    -8.1999999999999993,
    -8.1799999999999997,
    -8.1600000000000001,
    -8.1400000000000006,
    -8.1199999999999992,
    -8.0999999999999996,
    -8.0800000000000001,
    -8.0600000000000005,
    -8.0399999999999991,
    -8.0199999999999996,
    -8,
    -7.9800000000000004,
    -7.96,
    -7.9399999999999995,
    -7.9199999999999999,
    -7.9000000000000004,
    -7.8799999999999999,
    -7.8599999999999994,
    -7.8399999999999999,
    -7.8200000000000003,
    -7.7999999999999998,
    -7.7799999999999994,
    -7.7599999999999998,
    -7.7400000000000002,
    -7.7199999999999998,
    -7.6999999999999993,
    -7.6799999999999997,
    -7.6600000000000001,
    -7.6400000000000006,
    -7.6200000000000001,
    -7.5999999999999996,
    -7.5800000000000001,
    -7.5600000000000005,
    -7.54,
    -7.5199999999999996,
    -7.5,
    -7.4800000000000004,
    -7.46,
    -7.4399999999999995,
    -7.4199999999999999,
    -7.4000000000000004,
    -7.3799999999999999,
    -7.3599999999999994,
    -7.3399999999999999,
    -7.3200000000000003,
    -7.2999999999999998,
    -7.2799999999999994,
    -7.2599999999999998,
    -7.2400000000000002,
    -7.2199999999999998,
    -7.1999999999999993,
    -7.1799999999999997,
    -7.1600000000000001,
    -7.1400000000000006,
    -7.1200000000000001,
    -7.0999999999999996,
    -7.0800000000000001,
    -7.0600000000000005,
    -7.04,
    -7.0199999999999996,
    -7,
    -6.9800000000000004,
    -6.96,
    -6.9399999999999995,
    -6.9199999999999999,
    -6.9000000000000004,
    -6.8799999999999999,
    -6.8599999999999994,
    -6.8399999999999999,
    -6.8200000000000003,
    -6.7999999999999998,
    -6.7799999999999994,
    -6.7599999999999998,
    -6.7400000000000002,
    -6.7199999999999998,
    -6.6999999999999993,
    -6.6799999999999997,
    -6.6600000000000001,
    -6.6400000000000006,
    -6.6200000000000001,
    -6.5999999999999996,
    -6.5800000000000001,
    -6.5600000000000005,
    -6.54,
    -6.5199999999999996,
    -6.5,
    -6.4800000000000004,
    -6.46,
    -6.4399999999999995,
    -6.4199999999999999,
    -6.4000000000000004,
    -6.3799999999999999,
    -6.3599999999999994,
    -6.3399999999999999,
    -6.3200000000000003,
    -6.2999999999999998,
    -6.2799999999999994,
    -6.2599999999999998,
    -6.2400000000000002,
    -6.2199999999999998,
    -6.1999999999999993,
    -6.1799999999999997,
    -6.1600000000000001,
    -6.1400000000000006,
    -6.1200000000000001,
    -6.0999999999999996,
    -6.0800000000000001,
    -6.0600000000000005,
    -6.04,
    -6.0199999999999996,
    -6,
    -5.9799999999999995,
    -5.96,
    -5.9399999999999995,
    -5.9199999999999999,
    -5.9000000000000004,
    -5.8799999999999999,
    -5.8600000000000003,
    -5.8399999999999999,
    -5.8200000000000003,
    -5.7999999999999998,
    -5.7800000000000002,
    -5.7599999999999998,
    -5.7400000000000002,
    -5.7199999999999998,
    -5.7000000000000002,
    -5.6799999999999997,
    -5.6600000000000001,
    -5.6399999999999997,
    -5.6200000000000001,
    -5.5999999999999996,
    -5.5800000000000001,
    -5.5599999999999996,
    -5.54,
    -5.5199999999999996,
    -5.5,
    -5.4799999999999995,
    -5.46,
    -5.4399999999999995,
    -5.4199999999999999,
    -5.3999999999999995,
    -5.3799999999999999,
    -5.3600000000000003,
    -5.3399999999999999,
    -5.3200000000000003,
    -5.2999999999999998,
    -5.2800000000000002,
    -5.2599999999999998,
    -5.2400000000000002,
    -5.2199999999999998,
    -5.2000000000000002,
    -5.1799999999999997,
    -5.1600000000000001,
    -5.1399999999999997,
    -5.1200000000000001,
    -5.0999999999999996,
    -5.0800000000000001,
    -5.0599999999999996,
    -5.04,
    -5.0199999999999996,
    -5,
    -4.9799999999999995,
    -4.96,
    -4.9399999999999995,
    -4.9199999999999999,
    -4.8999999999999995,
    -4.8799999999999999,
    -4.8600000000000003,
    -4.8399999999999999,
    -4.8200000000000003,
    -4.7999999999999998,
    -4.7800000000000002,
    -4.7599999999999998,
    -4.7400000000000002,
    -4.7199999999999998,
    -4.7000000000000002,
    -4.6799999999999997,
    -4.6600000000000001,
    -4.6399999999999997,
    -4.6200000000000001,
    -4.5999999999999996,
    -4.5800000000000001,
    -4.5599999999999996,
    -4.54,
    -4.5199999999999996,
    -4.5,
    -4.4799999999999995,
    -4.46,
    -4.4399999999999995,
    -4.4199999999999999,
    -4.3999999999999995,
    -4.3799999999999999,
    -4.3600000000000003,
    -4.3399999999999999,
    -4.3200000000000003,
    -4.2999999999999998,
    -4.2800000000000002,
    -4.2599999999999998,
    -4.2400000000000002,
    -4.2199999999999998,
    -4.2000000000000002,
    -4.1799999999999997,
    -4.1600000000000001,
    -4.1399999999999997,
    -4.1200000000000001,
    -4.0999999999999996,
    -4.0800000000000001,
    -4.0599999999999996,
    -4.04,
    -4.0199999999999996,
    -4,
    -3.9799999999999995,
    -3.96,
    -3.9399999999999995,
    -3.9199999999999999,
    -3.8999999999999995,
    -3.8799999999999999,
    -3.8599999999999994,
    -3.8399999999999999,
    -3.8200000000000003,
    -3.7999999999999998,
    -3.7800000000000002,
    -3.7599999999999998,
    -3.7400000000000002,
    -3.7199999999999998,
    -3.7000000000000002,
    -3.6799999999999997,
    -3.6600000000000001,
    -3.6399999999999997,
    -3.6200000000000001,
    -3.5999999999999996,
    -3.5800000000000001,
    -3.5599999999999996,
    -3.54,
    -3.5199999999999996,
    -3.5,
    -3.4799999999999995,
    -3.46,
    -3.4399999999999995,
    -3.4199999999999999,
    -3.3999999999999995,
    -3.3799999999999999,
    -3.3599999999999994,
    -3.3399999999999999,
    -3.3200000000000003,
    -3.2999999999999998,
    -3.2800000000000002,
    -3.2599999999999998,
    -3.2400000000000002,
    -3.2199999999999998,
    -3.2000000000000002,
    -3.1799999999999997,
    -3.1600000000000001,
    -3.1399999999999997,
    -3.1200000000000001,
    -3.0999999999999996,
    -3.0800000000000001,
    -3.0599999999999996,
    -3.04,
    -3.0199999999999996,
    -3,
    -2.9799999999999995,
    -2.96,
    -2.9399999999999995,
    -2.9199999999999999,
    -2.8999999999999995,
    -2.8799999999999999,
    -2.8599999999999994,
    -2.8399999999999999,
    -2.8200000000000003,
    -2.7999999999999998,
    -2.7800000000000002,
    -2.7599999999999998,
    -2.7400000000000002,
    -2.7199999999999998,
    -2.7000000000000002,
    -2.6799999999999997,
    -2.6600000000000001,
    -2.6399999999999997,
    -2.6200000000000001,
    -2.5999999999999996,
    -2.5800000000000001,
    -2.5599999999999996,
    -2.54,
    -2.5199999999999996,
    -2.5,
    -2.4799999999999995,
    -2.46,
    -2.4399999999999995,
    -2.4199999999999999,
    -2.3999999999999995,
    -2.3799999999999999,
    -2.3599999999999994,
    -2.3399999999999999,
    -2.3200000000000003,
    -2.2999999999999998,
    -2.2800000000000002,
    -2.2599999999999998,
    -2.2400000000000002,
    -2.2199999999999998,
    -2.2000000000000002,
    -2.1799999999999997,
    -2.1600000000000001,
    -2.1399999999999997,
    -2.1200000000000001,
    -2.0999999999999996,
    -2.0800000000000001,
    -2.0599999999999996,
    -2.04,
    -2.0199999999999996,
    -2,
    -1.9800000000000004,
    -1.9599999999999991,
    -1.9399999999999995,
    -1.9199999999999999,
    -1.9000000000000004,
    -1.879999999999999,
    -1.8599999999999994,
    -1.8399999999999999,
    -1.8200000000000003,
    -1.8000000000000007,
    -1.7799999999999994,
    -1.7599999999999998,
    -1.7400000000000002,
    -1.7200000000000006,
    -1.6999999999999993,
    -1.6799999999999997,
    -1.6600000000000001,
    -1.6400000000000006,
    -1.6199999999999992,
    -1.5999999999999996,
    -1.5800000000000001,
    -1.5600000000000005,
    -1.5399999999999991,
    -1.5199999999999996,
    -1.5,
    -1.4800000000000004,
    -1.4599999999999991,
    -1.4399999999999995,
    -1.4199999999999999,
    -1.4000000000000004,
    -1.379999999999999,
    -1.3599999999999994,
    -1.3399999999999999,
    -1.3200000000000003,
    -1.2999999999999989,
    -1.2799999999999994,
    -1.2599999999999998,
    -1.2400000000000002,
    -1.2200000000000006,
    -1.1999999999999993,
    -1.1799999999999997,
    -1.1600000000000001,
    -1.1400000000000006,
    -1.1199999999999992,
    -1.0999999999999996,
    -1.0800000000000001,
    -1.0600000000000005,
    -1.0399999999999991,
    -1.0199999999999996,
    -1,
    -0.98000000000000043,
    -0.95999999999999908,
    -0.9399999999999995,
    -0.91999999999999993,
    -0.90000000000000036,
    -0.87999999999999901,
    -0.85999999999999943,
    -0.83999999999999986,
    -0.82000000000000028,
    -0.79999999999999893,
    -0.77999999999999936,
    -0.75999999999999979,
    -0.74000000000000021,
    -0.72000000000000064,
    -0.69999999999999929,
    -0.67999999999999972,
    -0.66000000000000014,
    -0.64000000000000057,
    -0.61999999999999922,
    -0.59999999999999964,
    -0.58000000000000007,
    -0.5600000000000005,
    -0.53999999999999915,
    -0.51999999999999957,
    -0.5,
    -0.48000000000000043,
    -0.45999999999999908,
    -0.4399999999999995,
    -0.41999999999999993,
    -0.40000000000000036,
    -0.37999999999999901,
    -0.35999999999999943,
    -0.33999999999999986,
    -0.32000000000000028,
    -0.29999999999999893,
    -0.27999999999999936,
    -0.25999999999999979,
    -0.24000000000000021,
    -0.22000000000000064,
    -0.19999999999999929,
    -0.17999999999999972,
    -0.16000000000000014,
    -0.14000000000000057,
    -0.11999999999999922,
    -0.099999999999999645,
    -0.080000000000000071,
    -0.060000000000000497,
    -0.039999999999999147,
    -0.019999999999999574,
    0,
    0.019999999999999574,
    0.040000000000000924,
    0.060000000000000497,
    0.080000000000000071,
    0.099999999999999645,
    0.12000000000000099,
    0.14000000000000057,
    0.16000000000000014,
    0.17999999999999972,
    0.20000000000000107,
    0.22000000000000064,
    0.24000000000000021,
    0.25999999999999979,
    0.27999999999999936,
    0.30000000000000071,
    0.32000000000000028,
    0.33999999999999986,
    0.35999999999999943,
    0.38000000000000078,
    0.40000000000000036,
    0.41999999999999993,
    0.4399999999999995,
    0.46000000000000085,
    0.48000000000000043,
    0.5,
    0.51999999999999957,
    0.54000000000000092,
    0.5600000000000005,
    0.58000000000000007,
    0.59999999999999964,
    0.62000000000000099,
    0.64000000000000057,
    0.66000000000000014,
    0.67999999999999972,
    0.70000000000000107,
    0.72000000000000064,
    0.74000000000000021,
    0.75999999999999979,
    0.77999999999999936,
    0.80000000000000071,
    0.82000000000000028,
    0.83999999999999986,
    0.85999999999999943,
    0.88000000000000078,
    0.90000000000000036,
    0.91999999999999993,
    0.9399999999999995,
    0.96000000000000085,
    0.98000000000000043,
    1,
    1.0199999999999996,
    1.0400000000000009,
    1.0600000000000005,
    1.0800000000000001,
    1.0999999999999996,
    1.120000000000001,
    1.1400000000000006,
    1.1600000000000001,
    1.1799999999999997,
    1.2000000000000011,
    1.2200000000000006,
    1.2400000000000002,
    1.2599999999999998,
    1.2799999999999994,
    1.3000000000000007,
    1.3200000000000003,
    1.3399999999999999,
    1.3599999999999994,
    1.3800000000000008,
    1.4000000000000004,
    1.4199999999999999,
    1.4399999999999995,
    1.4600000000000009,
    1.4800000000000004,
    1.5,
    1.5199999999999996,
    1.5400000000000009,
    1.5600000000000005,
    1.5800000000000001,
    1.5999999999999996,
    1.620000000000001,
    1.6400000000000006,
    1.6600000000000001,
    1.6799999999999997,
    1.7000000000000011,
    1.7200000000000006,
    1.7400000000000002,
    1.7599999999999998,
    1.7799999999999994,
    1.8000000000000007,
    1.8200000000000003,
    1.8399999999999999,
    1.8599999999999994,
    1.8800000000000008,
    1.9000000000000004,
    1.9199999999999999,
    1.9399999999999995,
    1.9600000000000009,
    1.9800000000000004,
    2,
    2.0199999999999996,
    2.0400000000000009,
    2.0600000000000005,
    2.0800000000000001,
    2.0999999999999996,
    2.120000000000001,
    2.1400000000000006,
    2.1600000000000001,
    2.1799999999999997,
    2.2000000000000011,
    2.2200000000000006,
    2.2400000000000002,
    2.2599999999999998,
    2.2800000000000011,
    2.3000000000000007,
    2.3200000000000003,
    2.3399999999999999,
    2.3599999999999994,
    2.3800000000000008,
    2.4000000000000004,
    2.4199999999999999,
    2.4399999999999995,
    2.4600000000000009,
    2.4800000000000004,
    2.5,
    2.5199999999999996,
    2.5400000000000009,
    2.5600000000000005,
    2.5800000000000001,
    2.5999999999999996,
    2.620000000000001,
    2.6400000000000006,
    2.6600000000000001,
    2.6799999999999997,
    2.7000000000000011,
    2.7200000000000006,
    2.7400000000000002,
    2.7599999999999998,
    2.7800000000000011,
    2.8000000000000007,
    2.8200000000000003,
    2.8399999999999999,
    2.8599999999999994,
    2.8800000000000008,
    2.9000000000000004,
    2.9199999999999999,
    2.9399999999999995,
    2.9600000000000009,
    2.9800000000000004,
    3,
    3.0199999999999996,
    3.0400000000000009,
    3.0600000000000005,
    3.0800000000000001,
    3.0999999999999996,
    3.120000000000001,
    3.1400000000000006,
    3.1600000000000001,
    3.1799999999999997,
    3.2000000000000011,
    3.2200000000000006,
    3.2400000000000002,
    3.2599999999999998,
    3.2800000000000011,
    3.3000000000000007,
    3.3200000000000003,
    3.3399999999999999,
    3.3599999999999994,
    3.3800000000000008,
    3.4000000000000004,
    3.4199999999999999,
    3.4399999999999995,
    3.4600000000000009,
    3.4800000000000004,
    3.5,
    3.5199999999999996,
    3.5400000000000009,
    3.5600000000000005,
    3.5800000000000001,
    3.5999999999999996,
    3.620000000000001,
    3.6400000000000006,
    3.6600000000000001,
    3.6799999999999997,
    3.7000000000000011,
    3.7200000000000006,
    3.7400000000000002,
    3.7599999999999998,
    3.7800000000000011,
    3.8000000000000007,
    3.8200000000000003,
    3.8399999999999999,
    3.8599999999999994,
    3.8800000000000008,
    3.9000000000000004,
    3.9199999999999999,
    3.9399999999999995,
    3.9600000000000009,
    3.9800000000000004,
    4,
    4.0199999999999996,
    4.0400000000000009,
    4.0600000000000005,
    4.0800000000000001,
    4.0999999999999996,
    4.120000000000001,
    4.1400000000000006,
    4.1600000000000001,
    4.1799999999999997,
    4.2000000000000011,
    4.2200000000000006,
    4.2400000000000002,
    4.2599999999999998,
    4.2800000000000011,
    4.3000000000000007,
    4.3200000000000003,
    4.3399999999999999,
    4.3599999999999994,
    4.3800000000000008,
    4.4000000000000004,
    4.4199999999999999,
    4.4399999999999995,
    4.4600000000000009,
    4.4800000000000004,
    4.5,
    4.5199999999999996,
    4.5400000000000009,
    4.5600000000000005,
    4.5800000000000001,
    4.5999999999999996,
    4.620000000000001,
    4.6400000000000006,
    4.6600000000000001,
    4.6799999999999997,
    4.7000000000000011,
    4.7200000000000006,
    4.7400000000000002,
    4.7599999999999998,
    4.7800000000000011,
    4.8000000000000007,
    4.8200000000000003,
    4.8399999999999999,
    4.8599999999999994,
    4.8800000000000008,
    4.9000000000000004,
    4.9199999999999999,
    4.9399999999999995,
    4.9600000000000009,
    4.9800000000000004,
    5,
    5.0199999999999996,
    5.0400000000000009,
    5.0600000000000005,
    5.0800000000000001,
    5.0999999999999996,
    5.120000000000001,
    5.1400000000000006,
    5.1600000000000001,
    5.1799999999999997,
    5.2000000000000011,
    5.2200000000000006,
    5.2400000000000002,
    5.2599999999999998,
    5.2800000000000011,
    5.3000000000000007,
    5.3200000000000003,
    5.3399999999999999,
    5.3599999999999994,
    5.3800000000000008,
    5.4000000000000004,
    5.4199999999999999,
    5.4399999999999995,
    5.4600000000000009,
    5.4800000000000004,
    5.5,
    5.5199999999999996,
    5.5400000000000009,
    5.5600000000000005,
    5.5800000000000001,
    5.5999999999999996,
    5.620000000000001,
    5.6400000000000006,
    5.6600000000000001,
    5.6799999999999997,
    5.7000000000000011,
    5.7200000000000006,
    5.7400000000000002,
    5.7599999999999998,
    5.7800000000000011,
    5.8000000000000007,
    5.8200000000000003,
    5.8399999999999999,
    5.8600000000000012,
    5.8800000000000008,
    5.9000000000000004,
    5.9199999999999999,
    5.9399999999999995,
    5.9600000000000009,
    5.9800000000000004,
    6,
};

const double tw1_log_cdf[tw_grid_knots] = {
    -49.506353700200158,
    -49.234414521056067,
    -48.963472341204572,
    -48.693563567045913,
    -48.424654559459519,
    -48.156767205836452,
    -47.889902870205596,
    -47.624011812393938,
    -47.359159645050177,
    -47.095296091595081,
    -46.832448964259541,
    -46.570602875954535,
    -46.309748839286478,
    -46.049897029975568,
    -45.791034890048543,
    -45.533170535919943,
    -45.276300923250012,
    -45.020410360000866,
    -44.765520151938908,
    -44.511608681044187,
    -44.258689149183262,
    -44.006746320928279,
    -43.755786335534346,
    -43.505799154479135,
    -43.256795321422302,
    -43.008761373951572,
    -42.761703682637197,
    -42.515614247664189,
    -42.270495473162377,
    -42.026340035038906,
    -41.783150566880529,
    -41.540923143532673,
    -41.299657530195127,
    -41.059350730331097,
    -40.820000581983543,
    -40.581604407091618,
    -40.34416061099958,
    -40.107668338929805,
    -39.872125576604077,
    -39.637528399672888,
    -39.403877175658934,
    -39.171168668793534,
    -38.939401264836285,
    -38.708573099229362,
    -38.478682030103499,
    -38.249726144648335,
    -38.021702417519556,
    -37.79461049054246,
    -37.568448353603657,
    -37.343212241856527,
    -37.118902274952625,
    -36.895515148764339,
    -36.673049250379286,
    -36.451502556507961,
    -36.230873712293018,
    -36.011159602248014,
    -35.79235960312883,
    -35.574470451384414,
    -35.357490906565374,
    -35.141418927403109,
    -34.92625250761639,
    -34.711989270053742,
    -34.498627782858939,
    -34.286165954784515,
    -34.074601680391133,
    -33.863932919692381,
    -33.654158008978051,
    -33.445274677579881,
    -33.237281061354196,
    -33.030175165802753,
    -32.823955034977097,
    -32.618618741485548,
    -32.414164188544163,
    -32.210589506636722,
    -32.007892738913583,
    -31.806071888570393,
    -31.605124893313093,
    -31.405049885957823,
    -31.205844878734197,
    -31.00750783216473,
    -30.810036844645403,
    -30.613429964229994,
    -30.417685123178234,
    -30.222800427846483,
    -30.02877388876361,
    -29.835603512119953,
    -29.643287316557025,
    -29.451823385114768,
    -29.261209699590083,
    -29.07144430665338,
    -28.882525235115018,
    -28.69445050164423,
    -28.507218157320491,
    -28.320826199132419,
    -28.135272681921315,
    -27.950555620951882,
    -27.766673058687914,
    -27.583623012602953,
    -27.401403511034246,
    -27.220012592883258,
    -27.039448281637419,
    -26.859708601279941,
    -26.680791583146284,
    -26.502695267872344,
    -26.325417678274292,
    -26.148956844577274,
    -25.973310798092257,
    -25.798477563854899,
    -25.624455177698504,
    -25.451241665688734,
    -25.278835062817045,
    -25.107233395757703,
    -24.936434696113142,
    -24.76643699776492,
    -24.597238328731702,
    -24.428836720546936,
    -24.261230203044864,
    -24.094416809907894,
    -23.928394569941101,
    -23.763161517768953,
    -23.598715683169956,
    -23.435055097476543,
    -23.272177792297015,
    -23.110081800497401,
    -22.94876515425036,
    -22.788225885167012,
    -22.628462026361305,
    -22.46947160871548,
    -22.311252665679518,
    -22.153803230695651,
    -21.997121335746101,
    -21.841205013635975,
    -21.686052297477072,
    -21.53166122058488,
    -21.378029816270544,
    -21.225156117869453,
    -21.073038159237719,
    -20.921673974051018,
    -20.77106159546382,
    -20.621199057874698,
    -20.472084395958031,
    -20.323715642892346,
    -20.176090833664702,
    -20.029208002568318,
    -19.883065184239943,
    -19.737660413806825,
    -19.59299172541181,
    -19.449057154711991,
    -19.305854736680594,
    -19.163382506835067,
    -19.021638500352452,
    -18.880620752867088,
    -18.740327300359972,
    -18.600756178521351,
    -18.461905423334699,
    -18.323773071255061,
    -18.186357158414481,
    -18.049655721350003,
    -17.913666796617825,
    -17.778388421218303,
    -17.643818631815527,
    -17.509955465616265,
    -17.376796959874238,
    -17.244341151987292,
    -17.112586079510582,
    -16.981529780087278,
    -16.851170291630858,
    -16.721505652192615,
    -16.592533899908407,
    -16.464253073152939,
    -16.336661210407751,
    -16.209756350405812,
    -16.083536531913754,
    -15.957999793961639,
    -15.833144175746748,
    -15.708967716550131,
    -15.585468455938679,
    -15.462644433562891,
    -15.340493689293156,
    -15.219014263125667,
    -15.098204195280323,
    -14.978061526126169,
    -14.858584296210738,
    -14.739770546262267,
    -14.621618317202346,
    -14.504125650103653,
    -14.387290586259644,
    -14.271111167124506,
    -14.155585434318489,
    -14.040711429692509,
    -13.926487195243409,
    -13.812910773192584,
    -13.699980205921152,
    -13.587693536023364,
    -13.476048806279147,
    -13.36504405966431,
    -13.254677339349401,
    -13.14494668869615,
    -13.035850151289768,
    -12.927385770883632,
    -12.819551591460034,
    -12.712345657190713,
    -12.605766012460276,
    -12.4998107018542,
    -12.394477770172562,
    -12.289765262421065,
    -12.1856712238167,
    -12.082193699802625,
    -11.979330736018994,
    -11.877080378336057,
    -11.775440672836774,
    -11.674409665827655,
    -11.573985403832651,
    -11.474165933609351,
    -11.374949302132309,
    -11.27633355660568,
    -11.178316744464759,
    -11.080896913375298,
    -10.984072111238609,
    -10.887840386185964,
    -10.792199786591022,
    -10.697148361063487,
    -10.602684158454172,
    -10.508805227858511,
    -10.415509618615609,
    -10.322795380313059,
    -10.230660562784839,
    -10.13910321611811,
    -10.048121390653517,
    -9.9577131369856851,
    -9.8678765059685638,
    -9.7786095487141651,
    -9.6899103165985263,
    -9.6017768612597489,
    -9.5142072346041182,
    -9.4271994888055755,
    -9.340751676309246,
    -9.2548618498351942,
    -9.1695280623774966,
    -9.0847483672098992,
    -9.0005208178862475,
    -8.9168434682433073,
    -8.8337143724038487,
    -8.7511315847791895,
    -8.6690931600705774,
    -8.5875971532738937,
    -8.5066416196798293,
    -8.4262246148786097,
    -8.3463441947613592,
    -8.2669984155235365,
    -8.1881853336674713,
    -8.1099030060051209,
    -8.0321494896611547,
    -7.9549228420753231,
    -7.8782211210062378,
    -7.8020423845333058,
    -7.7263846910604688,
    -7.6512460993190539,
    -7.5766246683705036,
    -7.5025184576100674,
    -7.4289255267697065,
    -7.3558439359209444,
    -7.2832717454786815,
    -7.2112070162042299,
    -7.1396478092084568,
    -7.0685921859555387,
    -6.998038208266224,
    -6.9279839383211765,
    -6.8584274386645978,
    -6.7893667722080115,
    -6.7208000022335179,
    -6.6527251923977735,
    -6.5851404067354542,
    -6.5180437096632584,
    -6.4514331659836293,
    -6.3853068408886822,
    -6.3196627999641812,
    -6.2544991091934081,
    -6.1898138349614067,
    -6.1256050440589647,
    -6.0618708036868938,
    -5.9986091814601323,
    -5.9358182454123058,
    -5.8734960639998439,
    -5.8116407061064974,
    -5.7502502410479588,
    -5.6893227385762071,
    -5.6288562688844532,
    -5.5688489026115642,
    -5.5092987108470082,
    -5.4502037651357025,
    -5.3915621374829001,
    -5.3333719003592481,
    -5.2756311267058873,
    -5.2183378899395541,
    -5.1614902639579148,
    -5.1050863231448709,
    -5.0491241423759794,
    -4.9936017970239579,
    -4.9385173629642969,
    -4.8838689165809805,
    -4.8296545347721809,
    -4.7758722949562369,
    -4.7225202750775539,
    -4.6695965536127249,
    -4.617099209576657,
    -4.5650263225289232,
    -4.5133759725800395,
    -4.4621462403980363,
    -4.4113352072150445,
    -4.3609409548339606,
    -4.3109615656353402,
    -4.2613951225842754,
    -4.2122397092374948,
    -4.1634934097505498,
    -4.1151543088850913,
    -4.0672204920163386,
    -4.0196900451406181,
    -3.9725610548830925,
    -3.9258316085055744,
    -3.8794997939145115,
    -3.8335636996690865,
    -3.7880214149895024,
    -3.7428710297653796,
    -3.6981106345643262,
    -3.6537383206406293,
    -3.6097521799441799,
    -3.5661503051294599,
    -3.5229307895647759,
    -3.4800917273416241,
    -3.4376312132842433,
    -3.3955473429593246,
    -3.3538382126859245,
    -3.3125019195455661,
    -3.271536561392494,
    -3.2309402368641598,
    -3.1907110453918914,
    -3.1508470872117678,
    -3.1113464633756953,
    -3.0722072757626977,
    -3.0334276270904228,
    -2.9950056209268601,
    -2.956939361702319,
    -2.919226954721585,
    -2.8818665061763542,
    -2.8448561231578871,
    -2.8081939136699239,
    -2.7718779866418402,
    -2.7359064519420588,
    -2.7002774203917399,
    -2.6649890037787149,
    -2.6300393148717269,
    -2.5954264674349301,
    -2.5611485762426711,
    -2.5272037570945947,
    -2.4935901268310086,
    -2.4603058033485969,
    -2.4273489056163964,
    -2.3947175536921463,
    -2.3624098687389239,
    -2.3304239730421323,
    -2.2987579900268367,
    -2.2674100442754015,
    -2.2363782615455654,
    -2.2056607687887952,
    -2.1752556941690595,
    -2.1451611670819615,
    -2.1153753181742738,
    -2.0858962793638369,
    -2.0567221838598941,
    -2.0278511661838095,
    -1.9992813621902332,
    -1.9710109090886383,
    -1.9430379454653661,
    -1.9153606113060622,
    -1.8879770480185765,
    -1.8608853984563389,
    -1.834083806942179,
    -1.8075704192926645,
    -1.7813433828428809,
    -1.7554008464717434,
    -1.7297409606278003,
    -1.7043618773555596,
    -1.6792617503223366,
    -1.6544387348456315,
    -1.6298909879210672,
    -1.6056166682508641,
    -1.5816139362728945,
    -1.5578809541902985,
    -1.5344158860016888,
    -1.5112168975319524,
    -1.4882821564636459,
    -1.4656098323690199,
    -1.443198096742647,
    -1.4210451230346972,
    -1.3991490866848619,
    -1.3775081651569063,
    -1.3561205379739081,
    -1.3349843867541606,
    -1.3140978952477615,
    -1.2934592493738895,
    -1.2730666372587811,
    -1.2529182492744362,
    -1.2330122780780137,
    -1.2133469186520029,
    -1.1939203683450816,
    -1.1747308269137688,
    -1.1557764965648198,
    -1.1370555819983781,
    -1.1185662904519231,
    -1.1003068317449805,
    -1.0822754183246519,
    -1.0644702653119347,
    -1.0468895905488276,
    -1.0295316146462998,
    -1.0123945610330507,
    -0.99547665600511226,
    -0.97877612877628695,
    -0.96229121152943142,
    -0.94602013946860009,
    -0.92996115087203379,
    -0.91411248714602045,
    -0.89847239287961222,
    -0.88303911590022832,
    -0.86781090733013144,
    -0.85278602164377826,
    -0.83796271672604872,
    -0.82333925393139817,
    -0.80891389814383086,
    -0.79468491783783934,
    -0.78065058514018049,
    -0.76680917589256936,
    -0.75315896971526664,
    -0.73969825007152878,
    -0.72642530433299646,
    -0.71333842384592472,
    -0.70043590399833033,
    -0.68771604428800392,
    -0.67517714839140486,
    -0.6628175242334361,
    -0.65063548405807625,
    -0.63862934449987463,
    -0.62679742665630167,
    -0.61513805616095785,
    -0.60364956325758024,
    -0.5923302828749285,
    -0.58117855470244129,
    -0.57019272326671366,
    -0.55937113800877702,
    -0.54871215336213641,
    -0.53821412883158781,
    -0.52787542907275564,
    -0.51769442397240972,
    -0.50766948872943429,
    -0.49779900393654081,
    -0.48808135566263111,
    -0.47851493553581759,
    -0.4690981408270784,
    -0.45982937453452771,
    -0.45070704546824902,
    -0.44172956833571553,
    -0.43289536382773497,
    -0.42420285870487995,
    -0.41565048588443265,
    -0.4072366845277583,
    -0.39895990012809512,
    -0.39081858459873164,
    -0.38281119636154415,
    -0.3749362004358574,
    -0.36719206852757869,
    -0.35957727911858717,
    -0.35209031755633619,
    -0.34472967614363159,
    -0.33749385422853945,
    -0.3303813582943963,
    -0.32339070204986603,
    -0.31652040651902369,
    -0.30976900013137421,
    -0.30313501881185378,
    -0.29661700607064684,
    -0.29021351309288734,
    -0.28392309882812639,
    -0.27774433007954735,
    -0.27167578159286898,
    -0.26571603614489642,
    -0.25986368463167875,
    -0.25411732615618315,
    -0.24847556811549554,
    -0.24293702628743938,
    -0.23750032491660722,
    -0.23216409679970879,
    -0.22692698337022882,
    -0.22178763478229505,
    -0.21674470999374962,
    -0.21179687684832693,
    -0.20694281215691998,
    -0.20218120177785404,
    -0.19751074069613331,
    -0.19293013310159432,
    -0.18843809246591475,
    -0.18403334161843232,
    -0.17971461282070159,
    -0.17548064783976078,
    -0.17133019802002492,
    -0.16726202435379037,
    -0.16327489755024263,
    -0.15936759810298379,
    -0.15553891635598696,
    -0.15178765256790341,
    -0.14811261697474096,
    -0.14451262985081273,
    -0.14098652156790847,
    -0.13753313265266942,
    -0.13415131384209281,
    -0.13083992613713563,
    -0.12759784085438267,
    -0.12442393967568294,
    -0.12131711469579447,
    -0.11827626846792888,
    -0.11530031404717721,
    -0.11238817503180032,
    -0.10953878560230472,
    -0.10675109055831421,
    -0.10402404535315955,
    -0.10135661612620499,
    -0.098747779732810931,
    -0.096196523771981027,
    -0.093701846611621412,
    -0.091262757411383025,
    -0.088878276143087839,
    -0.086547433608703012,
    -0.084269271455855277,
    -0.082042842190835727,
    -0.079867209189134897,
    -0.077741446703421577,
    -0.075664639869044828,
    -0.073635884706952842,
    -0.071654288124087751,
    -0.069718967911225824,
    -0.067829052738273707,
    -0.065983682146990075,
    -0.064182006541168277,
    -0.062423187174258057,
    -0.060706396134444882,
    -0.059030816327199614,
    -0.05739564145526449,
    -0.055800075996154545,
    -0.054243335177138405,
    -0.052724644947721153,
    -0.051243241949667076,
    -0.049798373484554674,
    -0.048389297478901437,
    -0.047015282446892313,
    -0.045675607450702205,
    -0.044369562058460127,
    -0.043096446299918593,
    -0.04185557061976878,
    -0.040646255828739215,
    -0.039467833052434211,
    -0.038319643677982664,
    -0.037201039298532301,
    -0.036111381655614457,
    -0.035050042579435059,
    -0.034016403927131865,
    -0.033009857519024001,
    -0.032029805072923724,
    -0.031075658136536517,
    -0.030146838018014356,
    -0.029242775714678898,
    -0.02836291184001425,
    -0.0275066965489262,
    -0.026673589461355944,
    -0.025863059584279341,
    -0.025074585232165054,
    -0.02430765394593392,
    -0.023561762410453234,
    -0.022836416370664393,
    -0.022131130546366919,
    -0.021445428545729957,
    -0.020778842777569025,
    -0.020130914362476764,
    -0.019501193042831003,
    -0.018889237091766403,
    -0.018294613221130344,
    -0.017716896488530191,
    -0.01715567020348966,
    -0.016610525832778389,
    -0.016081062904992966,
    -0.015566888914408075,
    -0.015067619224212741,
    -0.014582876969118934,
    -0.014112292957457291,
    -0.013655505572775506,
    -0.013212160675020084,
    -0.012781911501345963,
    -0.012364418566603964,
    -0.011959349563566892,
    -0.011566379262955043,
    -0.011185189413281144,
    -0.010815468640606342,
    -0.010456912348233963,
    -0.010109222616394671,
    -0.0097721081019747705,
    -0.0094452839383322006,
    -0.0091284716352500097,
    -0.0088213989790766195,
    -0.0085237999330829966,
    -0.0082354145381037906,
    -0.0079559888134851844,
    -0.0076852746583901503,
    -0.0074230297534957279,
    -0.0071690174631406913,
    -0.0069230067379304362,
    -0.0066847720178627567,
    -0.006454093136001861,
    -0.0062307552227379671,
    -0.0060145486106447784,
    -0.0058052687400195653,
    -0.0056027160650646965,
    -0.0054066959608129583,
    -0.0052170186307712446,
    -0.0050334990153368233,
    -0.0048559567010149508,
    -0.0046842158304342676,
    -0.0045181050132342242,
    -0.004357457237793399,
    -0.0042021097838478485,
    -0.0040519041360431007,
    -0.0039066858983739516,
    -0.0037663047095916483,
    -0.0036306141595830932,
    -0.0034994717067036432,
    -0.0033727385961170092,
    -0.0032502797791449183,
    -0.0031319638336240701,
    -0.0030176628853104807,
    -0.0029072525303018037,
    -0.002800611758542835,
    -0.0026976228783538126,
    -0.0025981714420595155,
    -0.0025021461726657391,
    -0.0024094388916323902,
    -0.0023199444477191846,
    -0.0022335606469286395,
    -0.002150188183529458,
    -0.0020697305721816906,
    -0.0019920940811465155,
    -0.0019171876665988138,
    -0.0018449229080350136,
    -0.001775213944759234,
    -0.0017079774134819898,
    -0.0016431323869831205,
    -0.0015806003138902885,
    -0.0015203049595053806,
    -0.0014621723477372321,
    -0.0014061307040888337,
    -0.0013521103997170567,
    -0.0013000438965539113,
    -0.0012498656934826964,
    -0.0012015122735505753,
    -0.0011549220522318682,
    -0.0011100353267173705,
    -0.0010667942262228248,
    -0.0010251426633192393,
    -0.00098502628625295229,
    -0.00094639243227299507,
    -0.00090919008193348586,
    -0.00087336981437039678,
    -0.00083888376355097788,
    -0.0008056855754542526,
    -0.00077373036621636239,
    -0.00074297468118142179,
    -0.00071337645488754522,
    -0.00068489497194602217,
    -0.00065749082882202929,
    -0.00063112589648445922,
    -0.00060576328393672206,
    -0.00058136730259521533,
    -0.00055790343151219729,
    -0.00053533828342805945,
    -0.00051363957163891186,
    -0.0004927760776751892,
    -0.00047271761976278454,
    -0.00045343502206177263,
    -0.00043490008468100553,
    -0.0004170855544294252,
    -0.00039996509631379723,
    -0.00038351326576267368,
    -0.0003677054815600359,
    -0.00035251799946759658,
    -0.00033792788655491414,
    -0.00032391299618934904,
    -0.00031045194367406212,
    -0.00029752408255396629,
    -0.00028510948154797041,
    -0.00027318890209756077,
    -0.00026174377651904659,
    -0.00025075618677693911,
    -0.00024020884380791794,
    -0.00023008506743593741,
    -0.000220368766846326,
    -0.00021104442158788466,
    -0.00020209706313943309,
    -0.00019351225696657255,
    -0.00018527608511462038,
    -0.00017737512928831309,
    -0.00016979645442364858,
    -0.00016252759272783929,
    -0.00015555652819912832,
    -0.00014887168158616611,
    -0.00014246189580662913,
    -0.00013631642177849225,
    -0.00013042490469056088,
    -0.00012477737067503937,
    -0.00011936421388890078,
    -0.00011417618398174646,
    -0.00010920437394007428,
    -0.00010444020831554097,
    -9.9875431810952678e-05,
    -9.5502098212829845e-05,
    -9.1312559672839847e-05,
    -8.729945632685409e-05,
    -8.3455706235289453e-05,
    -7.9774495639617238e-05,
    -7.6249269531263568e-05,
    -7.2873722513699862e-05,
    -6.9641789974947714e-05,
    -6.6547639516891468e-05,
    -6.358566267917718e-05,
    -6.0750466928308084e-05,
    -5.8036867904759587e-05,
    -5.5439881925382159e-05,
    -5.2954718729705818e-05,
    -5.0576774469200642e-05,
    -4.8301624925561742e-05,
    -4.6125018957747606e-05,
    -4.4042872161627257e-05,
    -4.2051260755739342e-05,
    -4.0146415647047845e-05,
    -3.8324716734059385e-05,
    -3.6582687369438464e-05,
    -3.4916989034494673e-05,
    -3.3324416175328982e-05,
    -3.1801891242136592e-05,
    -3.0346459874019142e-05,
    -2.8955286273361017e-05,
    -2.7625648714013836e-05,
    -2.6354935238449525e-05,
    -2.5140639476249487e-05,
    -2.3980356633541743e-05,
    -2.2871779600855872e-05,
    -2.1812695222015218e-05,
    -2.0800980675091434e-05,
    -1.9834599999493926e-05,
    -1.8911600735764697e-05,
    -1.8030110688504683e-05,
    -1.7188334813199367e-05,
    -1.6384552201288263e-05,
    -1.5617113194113045e-05,
    -1.4884436582548461e-05,
    -1.4185006922507842e-05,
    -1.3517371944112069e-05,
    -1.2880140049298148e-05,
    -1.2271977919955812e-05,
    -1.1691608197617869e-05,
    -1.1137807250465194e-05,
    -1.0609403040409942e-05,
    -1.010527304662084e-05,
    -9.6243422835681911e-06,
    -9.1655813868286464e-06,
    -8.7280047784152768e-06,
    -8.3106688817649326e-06,
    -7.9126704378952078e-06,
    -7.533144850452522e-06,
    -7.171264620378945e-06,
    -6.8262378221227522e-06,
    -6.4973066555860644e-06,
    -6.1837460392797365e-06,
    -5.884862262780761e-06,
    -5.5999916999340845e-06,
    -5.3284995534875177e-06,
    -5.069778672681149e-06,
    -4.8232483909432782e-06,
    -4.5883534346514135e-06,
    -4.364562856105772e-06,
    -4.15136901602767e-06,
    -3.9482866062561392e-06,
    -3.7548517136412737e-06,
    -3.5706209115888996e-06,
    -3.3951704043471301e-06,
    -3.2280951846212067e-06,
    -3.0690082438181742e-06,
    -2.917539804833801e-06,
    -2.7733365849308739e-06,
    -2.6360610963690607e-06,
    -2.5053909589177248e-06,
    -2.3810182694375864e-06,
    -2.2626489590307879e-06,
    -2.150002210923005e-06,
    -2.0428098835660544e-06,
    -1.9408159560582805e-06,
};

const double tw1_log_sf[tw_grid_knots] = {
    -3.1598303696543667e-22,
    -4.1473000195485399e-22,
    -5.4379366936421982e-22,
    -7.1228539360264481e-22,
    -9.320511287899643e-22,
    -1.2183771240720763e-21,
    -1.5910339416641644e-21,
    -2.0756516249020538e-21,
    -2.7050686957710157e-21,
    -3.5218656425098621e-21,
    -4.5806366206821777e-21,
    -5.9517427564862615e-21,
    -7.7255893689475147e-21,
    -1.0018064595911277e-20,
    -1.297795388441288e-20,
    -1.6795591091796632e-20,
    -2.1714625715628378e-20,
    -2.8046857479441992e-20,
    -3.6189419638666414e-20,
    -4.6650249323337015e-20,
    -6.0075241626291138e-20,
    -7.7288148990653464e-20,
    -9.9335262356060107e-20,
    -1.2754736660539622e-19,
    -1.6361099548114867e-19,
    -2.0966805275474038e-19,
    -2.6842814727944672e-19,
    -3.4332334682352539e-19,
    -4.386893272346049e-19,
    -5.6000567512859479e-19,
    -7.1418096741930415e-19,
    -9.0992648391629117e-19,
    -1.1582081860569776e-18,
    -1.4728229649971299e-18,
    -1.8711086046309487e-18,
    -2.3748333504691961e-18,
    -3.0112975418285818e-18,
    -3.8147049983208249e-18,
    -4.8278734793479005e-18,
    -6.1043600259884932e-18,
    -7.7110510268096641e-18,
    -9.7314509377815253e-18,
    -1.2269670559017444e-17,
    -1.5455401820995333e-17,
    -1.9450050059013036e-17,
    -2.4454286786516591e-17,
    -3.0717399603507129e-17,
    -3.8548653986295711e-17,
    -4.8331490251082289e-17,
    -6.0540915882850516e-17,
    -7.5764466188365109e-17,
    -9.4728653445454475e-17,
    -1.1833060255174677e-16,
    -1.4767724529605836e-16,
    -1.8413293353109604e-16,
    -2.2937817751626003e-16,
    -2.854800275948199e-16,
    -3.549799192946711e-16,
    -4.4099818832306808e-16,
    -5.4736329799647807e-16,
    -6.7876784798510398e-16,
    -8.4095857661160153e-16,
    -1.0409654627110255e-15,
    -1.2873816668976983e-15,
    -1.5907008647005772e-15,
    -1.9637255801952017e-15,
    -2.4220599229630765e-15,
    -2.9847073962435615e-15,
    -3.6747875944154489e-15,
    -4.5204033613891186e-15,
    -5.5556829561366727e-15,
    -6.8220339015267522e-15,
    -8.3696511612807674e-15,
    -1.0259323360244502e-14,
    -1.2564604020284192e-14,
    -1.5374411035739583e-14,
    -1.8796139473548254e-14,
    -2.2959378653442249e-14,
    -2.8020363569358018e-14,
    -3.4167283477451169e-14,
    -4.1626606837793771e-14,
    -5.0670628879046754e-14,
    -6.1626456793371958e-14,
    -7.4886674718401164e-14,
    -9.092204637426885e-14,
    -1.1029657595855323e-13,
    -1.3368537325080721e-13,
    -1.6189581479539488e-13,
    -1.9589262849421766e-13,
    -2.3682751426497027e-13,
    -2.8607418342640575e-13,
    -3.4526971467524524e-13,
    -4.1636331712965708e-13,
    -5.0167384419527734e-13,
    -6.0395742859347313e-13,
    -7.264871344882435e-13,
    -8.7314648456316366e-13,
    -1.0485393530051406e-12,
    -1.2581188194547446e-12,
    -1.5083382121393052e-12,
    -1.8068280227705604e-12,
    -2.1626028397560149e-12,
    -2.586303232571077e-12,
    -3.0904782365919275e-12,
    -3.6899150557152607e-12,
    -4.4020232789345522e-12,
    -5.247282470058938e-12,
    -6.2497630565443864e-12,
    -7.4377318108674228e-12,
    -8.8443554231721585e-12,
    -1.0508516809740306e-11,
    -1.2475761978050279e-11,
    -1.4799396750275114e-11,
    -1.7541756389678726e-11,
    -2.0775674086261178e-11,
    -2.4586177515218119e-11,
    -2.9072447748425293e-11,
    -3.435007857123114e-11,
    -4.0553680705885422e-11,
    -4.7839879851958919e-11,
    -5.6390766625439528e-11,
    -6.6417861478909478e-11,
    -7.8166668578028683e-11,
    -9.1921901103272074e-11,
    -1.0801347217786746e-10,
    -1.2682335729361727e-10,
    -1.4879344806995713e-10,
    -1.7443453389062085e-10,
    -2.0433656245549409e-10,
    -2.3918035370247366e-10,
    -2.797509604198464e-10,
    -3.2695289301312294e-10,
    -3.8182745521361805e-10,
    -4.4557246586914381e-10,
    -5.1956467625780231e-10,
    -6.0538522949427104e-10,
    -7.0484855000262325e-10,
    -8.2003509841511934e-10,
    -9.5332847687084472e-10,
    -1.1074574248506488e-09,
    -1.2855433142475997e-09,
    -1.4911538180281276e-09,
    -1.7283634949705294e-09,
    -2.0018221391821091e-09,
    -2.3168318114013479e-09,
    -2.6794335881468807e-09,
    -3.0965051763827331e-09,
    -3.5758706466584337e-09,
    -4.126423711122131e-09,
    -4.7582660777005474e-09,
    -5.4828626137158542e-09,
    -6.3132152002676855e-09,
    -7.2640573779776883e-09,
    -8.3520720902718241e-09,
    -9.5961350496069697e-09,
    -1.1017586525902921e-08,
    -1.2640534634433672e-08,
    -1.4492193466733174e-08,
    -1.6603259784268295e-08,
    -1.9008332301749863e-08,
    -2.1746378023322112e-08,
    -2.4861250431726824e-08,
    -2.8402264879720984e-08,
    -3.2424836934080778e-08,
    -3.6991189990661327e-08,
    -4.2171139034936134e-08,
    -4.8042958015961696e-08,
    -5.4694338989169617e-08,
    -6.2223451854792201e-08,
    -7.0740114272511662e-08,
    -8.0367082179736924e-08,
    -9.1241472146023697e-08,
    -1.0351632780061156e-07,
    -1.173623434480684e-07,
    -1.3296975916707209e-07,
    -1.5055044272962364e-07,
    -1.7034017484811797e-07,
    -1.9260115566511266e-07,
    -2.1762475155449648e-07,
    -2.4573450291876742e-07,
    -2.7728941502020445e-07,
    -3.1268755563198653e-07,
    -3.5236998485370377e-07,
    -3.9682504430089205e-07,
    -4.4659303471749167e-07,
    -5.0227131307101742e-07,
    -5.6451984216072115e-07,
    -6.3406722811730434e-07,
    -7.1171728326169751e-07,
    -7.9835615422144843e-07,
    -8.9496005785408572e-07,
    -1.0026036697495219e-06,
    -1.1224692132144233e-06,
    -1.255856298990831e-06,
    -1.4041925692464642e-06,
    -1.5690452020844007e-06,
    -1.7521333360704743e-06,
    -1.9553414774144309e-06,
    -2.1807339556490587e-06,
    -2.4305704973401296e-06,
    -2.7073229901740704e-06,
    -3.0136935141346579e-06,
    -3.3526337192972593e-06,
    -3.7273656340071025e-06,
    -4.1414039905274264e-06,
    -4.5985801593216803e-06,
    -5.1030677866536174e-06,
    -5.65941023410954e-06,
    -6.2725499227762813e-06,
    -6.9478596877879219e-06,
    -7.6911762538843019e-06,
    -8.5088359453739905e-06,
    -9.4077127483035502e-06,
    -1.0395258845685981e-05,
    -1.1479547750966813e-05,
    -1.2669320167311691e-05,
    -1.3974032704473075e-05,
    -1.5403909587738471e-05,
    -1.6969997496352945e-05,
    -1.8684223671907353e-05,
    -2.0559457438985431e-05,
    -2.2609575283668711e-05,
    -2.484952963635945e-05,
    -2.7295421507704668e-05,
    -2.996457712760482e-05,
    -3.2875628737843486e-05,
    -3.6048599689972246e-05,
    -3.9504993999326872e-05,
    -4.3267890506568785e-05,
    -4.7362041796613667e-05,
    -5.18139780232822e-05,
    -5.6652115786729318e-05,
    -6.1906872206956778e-05,
    -6.7610784334883444e-05,
    -7.3798634036915419e-05,
    -8.0507578486102831e-05,
    -8.7777286386191763e-05,
    -9.5650080049675094e-05,
    -0.00010417108344446896,
    -0.00011338837631479812,
    -0.00012335315447554627,
    -0.00013411989636841529,
    -0.00014574653595904419,
    -0.00015829464204331368,
    -0.00017182960401939434,
    -0.00018642082416863576,
    -0.00020214191647691931,
    -0.00021907091201103091,
    -0.00023729047085229945,
    -0.0002568881005713963,
    -0.00027795638121287495,
    -0.0003005931967396133,
    -0.00032490197286900448,
    -0.00035099192121391839,
    -0.00037897828962051347,
    -0.0004089826185760972,
    -0.0004411330035366449,
    -0.00047556436300385261,
    -0.00051241871215806434,
    -0.00055184544183017024,
    -0.00059400160257355012,
    -0.00063905219357243822,
    -0.00068717045609869654,
    -0.00073853817120645782,
    -0.00079334596132840467,
    -0.00085179359541311735,
    -0.00091409029721989702,
    -0.00098045505636224265,
    -0.001051116941667441,
    -0.0011263154163964988,
    -0.0012063006548463124,
    -0.0012913338598315046,
    -0.0013816875805241491,
    -0.0014776460301060674,
    -0.0015795054026704904,
    -0.0016875741887891504,
    -0.0018021734891436709,
    -0.0019236373256034517,
    -0.0020523129491156439,
    -0.0021885611437607588,
    -0.0023327565263127951,
    -0.0024852878406339111,
    -0.002646558246222079,
    -0.0028169856002263449,
    -0.0029970027322348807,
    -0.0031870577111398897,
    -0.0033876141033826949,
    -0.0035991512218790543,
    -0.0038221643649336821,
    -0.0040571650444510077,
    -0.0043046812027617487,
    -0.0045652574173918872,
    -0.0048394550931121234,
    -0.0051278526406209101,
    -0.0054310456412300862,
    -0.0057496469969392254,
    -0.0060842870653078449,
    -0.0064356137785555679,
    -0.0068042927463461446,
    -0.0071910073417379384,
    -0.0075964587698128224,
    -0.0080213661185273896,
    -0.0084664663913598965,
    -0.0089325145213662097,
    -0.0094202833662888202,
    -0.0099305636844052511,
    -0.010464164090837383,
    -0.01102191099408836,
    -0.011604648512609162,
    -0.012213238371245331,
    -0.012848559777454931,
    -0.013511509277230993,
    -0.014203000590711523,
    -0.014923964427498628,
    -0.015675348281758476,
    -0.016458116207216787,
    -0.017273248572208407,
    -0.018121741794986893,
    -0.019004608059541173,
    -0.019922875012212769,
    -0.020877585439447087,
    -0.021869796927056304,
    -0.022900581501409757,
    -0.023971025253009867,
    -0.025082227942947059,
    -0.026235302592766411,
    -0.027431375058308938,
    -0.028671583588131742,
    -0.02995707836713259,
    -0.031289021046042267,
    -0.032668584257470469,
    -0.034096951119219052,
    -0.035575314725596746,
    -0.037104877627492872,
    -0.038686851301986153,
    -0.04032245561227786,
    -0.042012918258756297,
    -0.043759474222009209,
    -0.045563365198610636,
    -0.047425839030515428,
    -0.049348149128899059,
    -0.051331553893284046,
    -0.053377316126790524,
    -0.055486702448354124,
    -0.057660982702739845,
    -0.059901429369183287,
    -0.06220931696947591,
    -0.064585921476305097,
    -0.067032519722644429,
    -0.069550388812976455,
    -0.072140805537116243,
    -0.074805045787382521,
    -0.077544383979849502,
    -0.080360092480389375,
    -0.083253441036191159,
    -0.086225696213426933,
    -0.089278120841701961,
    -0.092411973465912761,
    -0.095628507806095692,
    -0.098928972225840447,
    -0.10231460920979951,
    -0.10578665485080627,
    -0.10934633834708786,
    -0.11299488151001454,
    -0.11673349828282609,
    -0.12056339427071884,
    -0.12448576628266574,
    -0.12850180188530475,
    -0.13261267896921,
    -0.13681956532781736,
    -0.14112361824926559,
    -0.14552598412136838,
    -0.15002779804992661,
    -0.15463018349053076,
    -0.15933425189401515,
    -0.16414110236567053,
    -0.16905182133830615,
    -0.17406748225923471,
    -0.17918914529120997,
    -0.18441785702735378,
    -0.18975465022005261,
    -0.19520054352381017,
    -0.20075654125200351,
    -0.20642363314748302,
    -0.21220279416692892,
    -0.21809498427885948,
    -0.22410114827517727,
    -0.23022221559611045,
    -0.23645910016840388,
    -0.24281270025659021,
    -0.24928389832716161,
    -0.25587356092545321,
    -0.26258253856502772,
    -0.26941166562935531,
    -0.27636176028555515,
    -0.28343362440996539,
    -0.29062804352530913,
    -0.29794578674919014,
    -0.30538760675367271,
    -0.31295423973567671,
    -0.32064640539792266,
    -0.32846480694015406,
    -0.33641013106035045,
    -0.34448304796567092,
    -0.35268421139281531,
    -0.36101425863755537,
    -0.36947381059311252,
    -0.37806347179711786,
    -0.38678383048686515,
    -0.39563545866255667,
    -0.40461891215827417,
    -0.41373473072036576,
    -0.42298343809298322,
    -0.43236554211049361,
    -0.44188153479645009,
    -0.4515318924688857,
    -0.4613170758516324,
    -0.47123753019140241,
    -0.4812936853803626,
    -0.4914859560839322,
    -0.50181474187355835,
    -0.51228042736420032,
    -0.52288338235628484,
    -0.53362396198187034,
    -0.5445025068547904,
    -0.55551934322453911,
    -0.56667478313367226,
    -0.57796912457846028,
    -0.58940265167265604,
    -0.60097563481404803,
    -0.61268833085369456,
    -0.62454098326756513,
    -0.63653382233041211,
    -0.64866706529170493,
    -0.66094091655337028,
    -0.673355567849237,
    -0.68591119842594217,
    -0.69860797522516804,
    -0.71144605306702147,
    -0.72442557483439673,
    -0.73754667165817622,
    -0.75080946310311258,
    -0.76421405735424186,
    -0.77776055140367717,
    -0.79144903123770449,
    -0.80527957202394762,
    -0.81925223829858762,
    -0.83336708415344696,
    -0.84762415342282627,
    -0.86202347987002081,
    -0.87656508737336725,
    -0.89124899011177305,
    -0.90607519274953119,
    -0.92104369062047331,
    -0.93615446991122753,
    -0.95140750784358796,
    -0.96680277285588767,
    -0.98234022478328975,
    -0.99801981503692372,
    -1.0138414867818404,
    -1.0298051751136406,
    -1.0459108072337742,
    -1.0621583026234755,
    -1.0785475732161751,
    -1.0950785235684366,
    -1.1117510510293382,
    -1.1285650459082488,
    -1.1455203916409442,
    -1.1626169649540261,
    -1.1798546360276418,
    -1.19723326865643,
    -1.2147527204086752,
    -1.2324128427836332,
    -1.2502134813670231,
    -1.2681544759846273,
    -1.2862356608540142,
    -1.3044568647343049,
    -1.3228179110740954,
    -1.3413186181572758,
    -1.359958799247057,
    -1.3787382627278859,
    -1.3976568122454334,
    -1.4167142468445646,
    -1.4359103611053217,
    -1.4552449452768854,
    -1.4747177854094842,
    -1.4943286634843769,
    -1.514077357541713,
    -1.5339636418064553,
    -1.5539872868122115,
    -1.5741480595231301,
    -1.5944457234537013,
    -1.6148800387866367,
    -1.6354507624886612,
    -1.6561576484243876,
    -1.6770004474681435,
    -1.6979789076138685,
    -1.719092774083008,
    -1.74034178943047,
    -1.7617256936486412,
    -1.7832442242694369,
    -1.8048971164644834,
    -1.8266841031433236,
    -1.8486049150498087,
    -1.8706592808564999,
    -1.8928469272573827,
    -1.9151675790585556,
    -1.9376209592671125,
    -1.9602067891783881,
    -1.9829247884611876,
    -2.0057746752413057,
    -2.0287561661833617,
    -2.0518689765707938,
    -2.0751128203841924,
    -2.098487410377909,
    -2.1219924581548679,
    -2.1456276742399916,
    -2.1693927681516652,
    -2.1932874484717395,
    -2.2173114229139577,
    -2.241464398390641,
    -2.2657460810780017,
    -2.2901561764797234,
    -2.3146943894892011,
    -2.3393604244500237,
    -2.364153985215335,
    -2.3890747752054149,
    -2.4141224974638908,
    -2.4392968547126554,
    -2.4645975494052816,
    -2.4900242837790882,
    -2.5155767599057484,
    -2.5412546797408186,
    -2.5670577451715966,
    -2.5929856580641424,
    -2.6190381203084359,
    -2.645214833862819,
    -2.6715155007969646,
    -2.6979398233336882,
    -2.7244875038894243,
    -2.7511582451138015,
    -2.7779517499278481,
    -2.8048677215612012,
    -2.8319058635881431,
    -2.8590658799623716,
    -2.8863474750512292,
    -2.9137503536683265,
    -2.94127422110535,
    -2.9689187831629784,
    -2.996683746180568,
    -3.0245688170650951,
    -3.0525737033190952,
    -3.0806981130673883,
    -3.1089417550832898,
    -3.1373043388139594,
    -3.165785574404115,
    -3.1943851727200885,
    -3.2231028453719492,
    -3.2519383047354151,
    -3.2808912639728081,
    -3.3099614370531003,
    -3.3391485387714206,
    -3.3684522847676552,
    -3.397872391544186,
    -3.427408576483264,
    -3.4570605578633447,
    -3.486828054874938,
    -3.5167107876354753,
    -3.5467084772041808,
    -3.5768208455953827,
    -3.60704761579197,
    -3.6373885117578393,
    -3.6678432584500631,
    -3.6984115818300545,
    -3.7290932088741173,
    -3.7598878675842586,
    -3.7907952869975796,
    -3.8218151971955128,
    -3.8529473293123075,
    -3.8841914155436164,
    -3.9155471891537594,
    -3.9470143844831962,
    -3.9785927369548588,
    -4.0102819830811871,
    -4.0420818604693673,
    -4.0739921078267605,
    -4.1060124649662759,
    -4.1381426728104955,
    -4.1703824733968009,
    -4.2027316098800211,
    -4.2351898265368071,
    -4.2677568687681475,
    -4.3004324831025791,
    -4.333216417198444,
    -4.3661084198458466,
    -4.3991082409686744,
    -4.4322156316261516,
    -4.4654303440132503,
    -4.498752131462572,
    -4.5321807484444898,
    -4.5657159505674176,
    -4.5993574945779487,
    -4.6331051383606185,
    -4.6669586409375938,
    -4.7009177624680607,
    -4.7349822642469022,
    -4.7691519087042922,
    -4.803426459403715,
    -4.8378056810405639,
    -4.8722893394404005,
    -4.9068772015576316,
    -4.9415690354721677,
    -4.9763646103881234,
    -5.0112636966312181,
    -5.04626606564592,
    -5.081371489991926,
    -5.116579743343415,
    -5.1518906004828526,
    -5.1873038373008598,
    -5.2228192307904822,
    -5.2584365590447666,
    -5.2941556012533271,
    -5.3299761376971926,
    -5.3658979497476489,
    -5.4019208198591029,
    -5.4380445315667485,
    -5.4742688694838746,
    -5.5105936192930232,
    -5.5470185677460186,
    -5.5835435026590972,
    -5.6201682129051447,
    -5.6568924884121268,
    -5.6937161201580144,
    -5.7306389001645925,
    -5.7676606214947164,
    -5.804781078244547,
    -5.8420000655431146,
    -5.8793173795413898,
    -5.916732817413469,
    -5.9542461773461914,
    -5.9918572585378715,
    -6.0295658611906706,
    -6.0673717865071737,
    -6.1052748366830212,
    -6.1432748149037337,
    -6.1813715253375978,
    -6.2195647731327464,
    -6.2578543644103881,
    -6.2962401062569979,
    -6.3347218067241569,
    -6.3732992748171684,
    -6.4119723204970445,
    -6.4507407546653175,
    -6.4896043891686261,
    -6.5285630367859477,
    -6.5676165112265412,
    -6.606764627124381,
    -6.6460072000316481,
    -6.6853440464109859,
    -6.7247749836355535,
    -6.7642998299801267,
    -6.8039184046154135,
    -6.843630527604998,
    -6.8834360198942663,
    -6.9233347033119719,
    -6.9633264005594047,
    -7.0034109352077145,
    -7.0435881316947313,
    -7.0838578153102789,
    -7.1242198122044993,
    -7.1646739493679465,
    -7.2052200546390894,
    -7.2458579566896573,
    -7.2865874850247954,
    -7.3274084699714406,
    -7.3683207426831041,
    -7.4093241351259325,
    -7.4504184800757587,
    -7.4916036111127298,
    -7.5328793626167236,
    -7.5742455697660702,
    -7.6157020685228334,
    -7.6572486956331494,
    -7.6988852886294374,
    -7.7406116858085472,
    -7.7824277262406838,
    -7.8243332497617599,
    -7.8663280969619604,
    -7.9084121091787187,
    -7.9505851285180249,
    -7.9928469978172973,
    -8.0351975606388866,
    -8.0776366613009269,
    -8.1201641448465338,
    -8.1627798570321701,
    -8.2054836443317605,
    -8.2482753539615068,
    -8.2911548338115573,
    -8.3341219324963411,
    -8.377176499332645,
    -8.4203183843110558,
    -8.4635474381487334,
    -8.5068635122098311,
    -8.5502664585722457,
    -8.5937561299778462,
    -8.6373323798398918,
    -8.6809950622282042,
    -8.7247440319027501,
    -8.7685791442638656,
    -8.8125002553879721,
    -8.856507221963227,
    -8.9005999013550419,
    -8.9447781515601594,
    -8.9890418312261104,
    -9.0333907996162868,
    -9.0778249166096856,
    -9.1223440427494111,
    -9.1669480391896272,
    -9.2116367676735393,
    -9.256410090573052,
    -9.3012678708846632,
    -9.3462099721907155,
    -9.3912362586643461,
    -9.4363465950888212,
    -9.4815408468330133,
    -9.5268188799164104,
    -9.5721805608286434,
    -9.6176257567053725,
    -9.6631543352668245,
    -9.7087661647901573,
    -9.7544611141232576,
    -9.8002390526708396,
    -9.8460998504217141,
    -9.8920433779104044,
    -9.9380695062357152,
    -9.9841781070164206,
    -10.03036905247926,
    -10.076642215250896,
    -10.122997468743467,
    -10.169434686683928,
    -10.21595374344834,
    -10.262554513824979,
    -10.30923687333469,
    -10.356000697826911,
    -10.402845863813859,
    -10.449772248106747,
    -10.496779728334404,
    -10.543868182376375,
    -10.59103748881409,
    -10.638287526505508,
    -10.685618175057723,
    -10.733029314363037,
    -10.780520824999801,
    -10.82809258788302,
    -10.875744484436476,
    -10.923476396680202,
    -10.971288206922329,
    -11.019179798248137,
    -11.067151053896989,
    -11.11520185777915,
    -11.163332094182593,
    -11.211541647754554,
    -11.259830404017581,
    -11.308198248545009,
    -11.356645067371272,
    -11.405170747423629,
    -11.453775175481425,
    -11.502458239163825,
    -11.551219826467328,
    -11.600059825920342,
    -11.648978125951743,
    -11.697974616480606,
    -11.747049186724272,
    -11.796201727088642,
    -11.845432127913551,
    -11.894740280576231,
    -11.944126076264427,
    -11.993589406780716,
    -12.043130164750732,
    -12.092748242373441,
    -12.142443533331029,
    -12.192215930505846,
    -12.242065328490865,
    -12.291991621260355,
    -12.341994703481436,
    -12.392074470424854,
    -12.44223081786763,
    -12.492463641328371,
    -12.542772837791,
    -12.593158303059473,
    -12.643619934857178,
    -12.69415763067625,
    -12.744771288174865,
    -12.795460806016889,
    -12.846226081941133,
    -12.897067016876299,
    -12.947983507987558,
    -12.998975456618187,
    -13.050042762489863,
    -13.101185325344801,
    -13.152403047816193,
};

const double tw2_log_cdf[tw_grid_knots] = {
    -83.757591098273934,
    -83.258346748233336,
    -82.761086148244857,
    -82.265829526397766,
    -81.772560500839305,
    -81.28128652446253,
    -80.791965854870853,
    -80.304632112589289,
    -79.819263711012141,
    -79.335867933280895,
    -78.854433826528577,
    -78.374957361529169,
    -77.897436955801282,
    -77.421873763543758,
    -76.948252153947507,
    -76.476573223318326,
    -76.006839611200306,
    -75.539033585462633,
    -75.073164219977471,
    -74.609219846651754,
    -74.147198956898976,
    -73.687099014155095,
    -73.228914790154391,
    -72.772640434023714,
    -72.318274964522615,
    -71.865810395392799,
    -71.415245724772205,
    -70.966576518748326,
    -70.519799240083486,
    -70.074909802258176,
    -69.631903177579787,
    -69.190776876491739,
    -68.75152440877828,
    -68.314145111036467,
    -67.878631689811257,
    -67.444982199782231,
    -67.013192815860123,
    -66.583257973371431,
    -66.15517407571771,
    -65.728938708911357,
    -65.304546471358208,
    -64.88199311098046,
    -64.461275777827794,
    -64.042389331296775,
    -63.625330510819261,
    -63.210095027550622,
    -62.796678717506694,
    -62.385078117512492,
    -61.975288846720566,
    -61.56730700120513,
    -61.161128431691935,
    -60.756749184595598,
    -60.354165295986576,
    -59.95337301534731,
    -59.554367920828298,
    -59.157146365901028,
    -58.761703828939616,
    -58.368036866879308,
    -57.976141321258865,
    -57.586013004003973,
    -57.197648159078454,
    -56.811042506267057,
    -56.42619233903816,
    -56.04309339550003,
    -55.661741914762779,
    -55.28213373878873,
    -54.904264820566603,
    -54.528131345991845,
    -54.1537291334377,
    -53.781054277086497,
    -53.410102731950175,
    -53.040870461870028,
    -52.673353605568884,
    -52.307547977177776,
    -51.943449675864287,
    -51.58105469264401,
    -51.220358993130631,
    -50.861358597483672,
    -50.504049523025884,
    -50.148427711968303,
    -49.79448920796419,
    -49.442230006426932,
    -49.091646056452944,
    -48.74273339465492,
    -48.395488016559163,
    -48.049905900448685,
    -47.705983060319625,
    -47.363715480910706,
    -47.023099162798637,
    -46.684130097161223,
    -46.346804295015957,
    -46.011117732948044,
    -45.677066424594919,
    -45.344646356652412,
    -45.013853524529658,
    -44.68468393531181,
    -44.357133569001164,
    -44.031198437272323,
    -43.70687452384368,
    -43.384157836581743,
    -43.06304435680471,
    -42.743530094133718,
    -42.425611043308379,
    -42.109283183467319,
    -41.794542530980323,
    -41.481385072548797,
    -41.169806809335633,
    -40.859803728350364,
    -40.551371828855949,
    -40.244507112070629,
    -39.939205570561811,
    -39.635463195916778,
    -39.333275986352326,
    -39.032639940870133,
    -38.733551052640237,
    -38.43600531406279,
    -38.13999872607647,
    -37.845527279935325,
    -37.552586973897746,
    -37.261173801439675,
    -36.971283758934746,
    -36.682912841724374,
    -36.396057043750815,
    -36.11071236378303,
    -35.826874792991944,
    -35.544540328345768,
    -35.263704964627564,
    -34.984364698264848,
    -34.706515522242157,
    -34.430153433271492,
    -34.155274425026739,
    -33.881874493662686,
    -33.609949632921371,
    -33.339495838750281,
    -33.070509104893766,
    -32.802985427004131,
    -32.53692079914012,
    -32.272311216327452,
    -32.009152673288128,
    -31.747441164262941,
    -31.487172683961202,
    -31.228343227014403,
    -30.970948787523991,
    -30.71498536013916,
    -30.460448939359278,
    -30.207335518897793,
    -29.955641093652829,
    -29.705361657384319,
    -29.456493204551329,
    -29.209031728831967,
    -28.962973224678208,
    -28.718313685780394,
    -28.475049106261448,
    -28.233175479839652,
    -27.992688800425004,
    -27.753585061821695,
    -27.515860257771596,
    -27.279510381656159,
    -27.044531427377368,
    -26.8109193882763,
    -26.578670257992741,
    -26.347780029747028,
    -26.118244697056344,
    -25.890060253140245,
    -25.663222691246894,
    -25.437728004492822,
    -25.213572186038892,
    -24.990751228911357,
    -24.769261126077044,
    -24.549097870454208,
    -24.330257454837223,
    -24.112735872033575,
    -23.896529114744141,
    -23.681633175585805,
    -23.468044047081307,
    -23.255757721784079,
    -23.044770192068967,
    -22.835077450300922,
    -22.626675488692772,
    -22.419560299468436,
    -22.213727874750187,
    -22.009174206560626,
    -21.805895286830449,
    -21.603887107455364,
    -21.403145660229054,
    -21.203666936861115,
    -21.005446928944803,
    -20.80848162806852,
    -20.612767025647305,
    -20.418299113074234,
    -20.225073881609195,
    -20.033087322456311,
    -19.842335426705709,
    -19.652814185360533,
    -19.464519589338281,
    -19.277447629447323,
    -19.091594296415284,
    -18.9069555808567,
    -18.723527473300383,
    -18.541305964162294,
    -18.360287043761303,
    -18.180466702318522,
    -18.001840929938226,
    -17.824405716624334,
    -17.648157052272566,
    -17.47309092666519,
    -17.299203329472032,
    -17.126490250256047,
    -16.954947678451873,
    -16.784571603392671,
    -16.615358014280229,
    -16.447302900197972,
    -16.28040225010978,
    -16.114652052852254,
    -15.950048297136629,
    -15.78658697154224,
    -15.62426406451949,
    -15.463075564387493,
    -15.303017459327537,
    -15.144085737382296,
    -14.986276386457089,
    -14.829585394317473,
    -14.674008748577906,
    -14.519542436711916,
    -14.366182446040401,
    -14.213924763734667,
    -14.062765376811363,
    -13.912700272128456,
    -13.763725436384931,
    -13.615836856118861,
    -13.469030517701238,
    -13.323302407336561,
    -13.178648511056434,
    -13.035064814720061,
    -12.892547304008284,
    -12.751091964422884,
    -12.610694781281424,
    -12.471351739714262,
    -12.333058824663016,
    -12.195812020874579,
    -12.059607312899267,
    -11.924440685086138,
    -11.790308121581083,
    -11.65720560632046,
    -11.525129123029183,
    -11.394074655216878,
    -11.264038186171994,
    -11.13501569895938,
    -11.00700317641583,
    -10.879996601144388,
    -10.753991955512083,
    -10.628985221643635,
    -10.504972381417158,
    -10.381949416459975,
    -10.259912308143306,
    -10.138857037577221,
    -10.018779585605531,
    -9.8996759328007666,
    -9.7815420594585873,
    -9.6643739455923843,
    -9.5481675709275784,
    -9.4329189148958328,
    -9.3186239566292777,
    -9.2052786749543287,
    -9.0928790483854769,
    -8.9814210551190108,
    -8.8709006730265383,
    -8.761313879648112,
    -8.6526566521857831,
    -8.5449249674962928,
    -8.438114802083966,
    -8.3322221320936389,
    -8.2272429333027475,
    -8.1231731811140691,
    -8.0200088505475176,
    -7.9177459162323558,
    -7.8163803523987507,
    -7.7159081328694548,
    -7.6163252310511727,
    -7.5176276199256655,
    -7.4198112720407163,
    -7.32287215950097,
    -7.2268062539582516,
    -7.1316095266021255,
    -7.0372779481498018,
    -6.9438074888360841,
    -6.8511941184029848,
    -6.7594338060890315,
    -6.6685225206186054,
    -6.5784562301906568,
    -6.4892309024675319,
    -6.4008425045632569,
    -6.3132870030318085,
    -6.2265603638549738,
    -6.1406585524299979,
    -6.0555775335570052,
    -5.9713132714260846,
    -5.8878617296041549,
    -5.805218871021566,
    -5.7233806579583897,
    -5.6423430520304771,
    -5.5621020141752062,
    -5.4826535046369731,
    -5.4039934829523864,
    -5.3261179079352079,
    -5.2490227376609928,
    -5.1727039294514627,
    -5.0971574398585755,
    -5.0223792246483461,
    -4.9483652387843824,
    -4.875111436411121,
    -4.8026137708368246,
    -4.7308681945162911,
    -4.6598706590333139,
    -4.5896171150828167,
    -4.5201035124528453,
    -4.4513258000061793,
    -4.3832799256618156,
    -4.3159618363761165,
    -4.2493674781237969,
    -4.1834927958786521,
    -4.1183337335941026,
    -4.0538862341835005,
    -3.9901462395003113,
    -3.9271096903180407,
    -3.8647725263100874,
    -3.8031306860293821,
    -3.7421801068879539,
    -3.6819167251363392,
    -3.6223364758429599,
    -3.5634352928733759,
    -3.5052091088695545,
    -3.4476538552290665,
    -3.3907654620843259,
    -3.3345398582818704,
    -3.2789729713616662,
    -3.2240607275365782,
    -3.169799051671907,
    -3.1161838672651418,
    -3.0632110964259041,
    -3.0108766598561472,
    -2.9591764768306268,
    -2.9081064651777555,
    -2.8576625412607872,
    -2.8078406199594865,
    -2.7586366146522585,
    -2.7100464371988493,
    -2.6620659979236181,
    -2.6146912055995282,
    -2.5679179674328263,
    -2.5217421890485467,
    -2.4761597744768786,
    -2.4311666261405129,
    -2.3867586448429559,
    -2.3429317297580337,
    -2.2996817784205041,
    -2.2570046867180373,
    -2.214896348884507,
    -2.1733526574947968,
    -2.1323695034611689,
    -2.0919427760313014,
    -2.0520683627881411,
    -2.0127421496516269,
    -1.9739600208824679,
    -1.9357178590880015,
    -1.8980115452304038,
    -1.8608369586372091,
    -1.8241899770144108,
    -1.7880664764622076,
    -1.7524623314935777,
    -1.7173734150557758,
    -1.6827955985549787,
    -1.6487247518841697,
    -1.615156743454454,
    -1.5820874402299634,
    -1.5495127077665167,
    -1.5174284102542066,
    -1.4858304105641031,
    -1.4547145702992326,
    -1.4240767498500435,
    -1.3939128084545094,
    -1.3642186042631221,
    -1.3349899944088881,
    -1.3062228350826213,
    -1.277912981613645,
    -1.2500562885561761,
    -1.2226486097815652,
    -1.195685798576603,
    -1.1691637077481298,
    -1.1430781897341318,
    -1.1174250967215642,
    -1.092200280771102,
    -1.0673995939490575,
    -1.0430188884666507,
    -1.0190540168268858,
    -0.99550083197924244,
    -0.97235518748237304,
    -0.94961293767506805,
    -0.92726993785566947,
    -0.90532204447016162,
    -0.88376511530913815,
    -0.86259500971386505,
    -0.84180758879163164,
    -0.82139871564059774,
    -0.80136425558430435,
    -0.78170007641607442,
    -0.76240204865344907,
    -0.74346604580285047,
    -0.72488794463462347,
    -0.70666362546862715,
    -0.68878897247050153,
    -0.67125987395877285,
    -0.65407222272288867,
    -0.63722191635231207,
    -0.62070485757680094,
    -0.60451695461788946,
    -0.58865412155172536,
    -0.57311227868323988,
    -0.5578873529317574,
    -0.54297527822803027,
    -0.52837199592271,
    -0.51407345520623204,
    -0.50007561354010677,
    -0.48637443709954531,
    -0.47296590122734333,
    -0.45984599089892164,
    -0.44701070119843994,
    -0.43445603780578285,
    -0.42217801749431666,
    -0.41017266863916085,
    -0.39843603173583042,
    -0.38696415992893696,
    -0.37575311955073837,
    -0.36479899066921095,
    -0.35409786764533124,
    -0.34364585969923656,
    -0.33343909148485873,
    -0.32347370367267414,
    -0.31374585354008805,
    -0.3042517155690439,
    -0.29498748205034969,
    -0.28594936369421314,
    -0.27713359024646628,
    -0.26853641110987836,
    -0.26015409597002204,
    -0.25198293542502631,
    -0.24401924161861155,
    -0.2362593488757205,
    -0.22869961434008865,
    -0.22133641861301737,
    -0.21416616639263183,
    -0.20718528711288489,
    -0.20039023558153193,
    -0.19377749261628374,
    -0.18734356567836843,
    -0.18108498950265123,
    -0.17499832672351737,
    -0.16908016849567373,
    -0.16332713510901739,
    -0.15773587659673047,
    -0.1523030733357372,
    -0.14702543663867951,
    -0.1418997093365357,
    -0.13692266635102951,
    -0.13209111525599021,
    -0.12740189682678479,
    -0.12285188557703734,
    -0.11843799028173521,
    -0.11415715448597138,
    -0.11000635699847647,
    -0.10598261236919962,
    -0.10208297135012463,
    -0.098304521338631157,
    -0.094644386802632499,
    -0.091099729686857492,
    -0.087667749799553885,
    -0.084345685179016555,
    -0.081130812439337521,
    -0.078020447094804657,
    -0.075011943862406449,
    -0.072102696941982639,
    -0.069290140273534487,
    -0.066571747771299344,
    -0.063945033534219126,
    -0.061407552032450928,
    -0.058956898269674735,
    -0.056590707920917992,
    -0.054306657445734645,
    -0.052102464176565798,
    -0.049975886382206618,
    -0.047924723306288906,
    -0.045946815180808273,
    -0.044040043214721034,
    -0.042202329557682453,
    -0.040431637239073441,
    -0.038725970082505216,
    -0.037083372595981705,
    -0.03550192983805199,
    -0.033979767260190009,
    -0.03251505052581425,
    -0.03110598530631321,
    -0.0297508170545016,
    -0.028447830756011028,
    -0.027195350659086896,
    -0.025991739983358703,
    -0.024835400608146239,
    -0.023724772740916129,
    -0.022658334566524489,
    -0.021634601877895059,
    -0.020652127688855368,
    -0.019709501829785394,
    -0.018805350526877818,
    -0.017938335965709162,
    -0.01710715583990563,
    -0.016310542885685956,
    -0.015547264403080274,
    -0.014816121764618898,
    -0.014115949912276467,
    -0.013445616843562991,
    -0.01280402308746671,
    -0.012190101171171813,
    -0.011602815078313197,
    -0.011041159699589957,
    -0.010504160276545781,
    -0.0099908718393426597,
    -0.0095003786392963713,
    -0.0090317935769393849,
    -0.0085842576264510608,
    -0.0081569392571188108,
    -0.0077490338526583179,
    -0.0073597631290630858,
    -0.0069883745516986515,
    -0.0066341407523626333,
    -0.0062963589469427405,
    -0.0059743503543290095,
    -0.0056674596172161043,
    -0.0053750542253992043,
    -0.0050965239421266557,
    -0.004831280234079435,
    -0.0045787557055028232,
    -0.0043384035370034229,
    -0.0041096969294754258,
    -0.0038921285536486581,
    -0.0036852100056349447,
    -0.0034884712689235787,
    -0.0033014601831959363,
    -0.0031237419202917636,
    -0.002954898467677265,
    -0.0027945281197187025,
    -0.0026422449770275198,
    -0.0024976784541429196,
    -0.0023604727957833717,
    -0.0022302866018675386,
    -0.0021067923614896005,
    -0.0019896759960350602,
    -0.0018786364115352654,
    -0.0017733850604310342,
    -0.0016736455127852165,
    -0.0015791530371014884,
    -0.0014896541907303464,
    -0.0014049064199671321,
    -0.0013246776698288129,
    -0.0012487460035400192,
    -0.0011768992317112989,
    -0.0011089345511970797,
    -0.0010446581935754909,
    -0.00098388508322931763,
    -0.00092643850494577142,
    -0.00087214978095324002,
    -0.00082085795734038387,
    -0.00077240949972044292,
    -0.00072665799806936719,
    -0.00068346388059626175,
    -0.00064269413653157605,
    -0.00060422204771526432,
    -0.00056792692881604313,
    -0.00053369387607034031,
    -0.00050141352435359584,
    -0.00047098181246756369,
    -0.00044229975645679889,
    -0.00041527323078923036,
    -0.00038981275725487584,
    -0.00036583330138261416,
    -0.00034325407623844153,
    -0.00032199835338558218,
    -0.00030199328088252527,
    -0.00028316970809102689,
    -0.00026546201714996797,
    -0.0002488079609333956,
    -0.00023314850729483306,
    -0.00021842768945221376,
    -0.00020459246230380184,
    -0.00019159256453230456,
    -0.00017938038628954032,
    -0.0001679108423301367,
    -0.00015714125038363737,
    -0.0001470312146207025,
    -0.00013754251404660603,
    -0.00012863899565668149,
    -0.00012028647217299723,
    -0.00011245262424995721,
    -0.00010510690694533434,
    -9.8220460335898962e-05,
    -9.1766024120282542e-05,
    -8.5717856055688799e-05,
    -8.0051654101769923e-05,
    -7.4744482118366227e-05,
    -6.9774698998233006e-05,
    -6.5121891074001575e-05,
    -6.0766807709976838e-05,
    -5.6691299918035614e-05,
    -5.2878261901769739e-05,
    -4.9311575390072769e-05,
    -4.5976056668343563e-05,
    -4.2857406172509309e-05,
    -3.994216055124876e-05,
    -3.7217647098219518e-05,
    -3.4671940434076581e-05,
    -3.229382136044084e-05,
    -3.0072737779726614e-05,
    -2.7998767586451067e-05,
    -2.6062583466896724e-05,
    -2.4255419478426503e-05,
    -2.2569039371497904e-05,
    -2.0995706554395793e-05,
    -1.9528155616944925e-05,
    -1.8159565356026388e-05,
    -1.6883533229537691e-05,
    -1.5694051165125558e-05,
    -1.4585482660032605e-05,
    -1.3552541121406637e-05,
    -1.2590269371012403e-05,
    -1.1694020259727439e-05,
    -1.0859438358310358e-05,
    -1.0082442637205559e-05,
    -9.3592101192131712e-06,
    -8.6861604285758714e-06,
    -8.0599412074489645e-06,
    -7.4774143599574749e-06,
    -6.9356430541848309e-06,
    -6.4318794833867946e-06,
    -5.9635533064600149e-06,
    -5.5282607650818242e-06,
    -5.123754411880433e-06,
    -4.7479334553856776e-06,
    -4.3988346416925527e-06,
    -4.0746236896952918e-06,
    -3.7735872130406553e-06,
    -3.4941251276765865e-06,
    -3.2347435104561872e-06,
    -2.994047874258494e-06,
    -2.7707368526224712e-06,
    -2.5635962581369064e-06,
    -2.3714935098052354e-06,
    -2.1933723806402508e-06,
    -2.0282480785840157e-06,
    -1.8752026294399463e-06,
    -1.7333805270629424e-06,
    -1.6019846705660181e-06,
    -1.4802725412447473e-06,
    -1.3675526163302472e-06,
    -1.2631810225659474e-06,
    -1.166558373428736e-06,
    -1.0771268261860276e-06,
    -9.9436731759787131e-07,
    -9.1779697282265592e-07,
    -8.4696668252923947e-07,
    -7.8145883566894673e-07,
    -7.2088519069808815e-07,
    -6.6488489268873246e-07,
    -6.1312261267930049e-07,
    -5.6528681270610057e-07,
    -5.2108811619821128e-07,
    -4.8025779239502702e-07,
    -4.4254633580126537e-07,
    -4.077221424554739e-07,
    -3.7557026835680383e-07,
    -3.4589127837648604e-07,
    -3.1850016189501842e-07,
    -2.9322532637814105e-07,
    -2.6990766278521405e-07,
    -2.4839966360299955e-07,
    -2.2856460549514489e-07,
    -2.1027579279250669e-07,
    -1.9341583973078635e-07,
    -1.7787601497213685e-07,
    -1.6355562121020635e-07,
    -1.5036141951750642e-07,
    -1.3820710043345895e-07,
    -1.2701278036577341e-07,
    -1.1670453895926655e-07,
    -1.0721399099279991e-07,
    -9.8477882479233995e-08,
    -9.0437716297448187e-08,
    -8.3039409354808835e-08,
    -7.6232968401480973e-08,
    -6.9972186494971458e-08,
    -6.4214369995877094e-08,
    -5.8920076665923193e-08,
    -5.4052874527224674e-08,
    -4.9579122481963086e-08,
    -4.5467758481617457e-08,
    -4.1690110566822173e-08,
    -3.8219717677214634e-08,
    -3.5032162007625855e-08,
    -3.2104919460926477e-08,
    -2.9417212210313201e-08,
    -2.6949881134602146e-08,
    -2.4685261362158766e-08,
    -2.2607069139113119e-08,
    -2.0700296580167553e-08,
    -1.8951115190173808e-08,
    -1.7346784714787053e-08,
    -1.5875570872909593e-08,
    -1.4526666419808239e-08,
    -1.3290121647131369e-08,
    -1.2156775993152279e-08,
    -1.1118200866267993e-08,
    -1.0166637250452122e-08,
    -9.2949479656538048e-09,
    -8.4965685959306665e-09,
    -7.7654610821184861e-09,
    -7.0960737537956661e-09,
    -6.4833023604494439e-09,
    -5.9224562096689083e-09,
    -5.4092241943164422e-09,
    -4.9396444834357818e-09,
    -4.510079875298047e-09,
    -4.117187155243846e-09,
    -3.7578975557560522e-09,
    -3.4293935527968848e-09,
    -3.1290895479258618e-09,
    -2.8546112181503331e-09,
    -2.6037798617798334e-09,
    -2.3745986316597337e-09,
    -2.1652335503567976e-09,
    -1.9740036291736745e-09,
    -1.7993685446728221e-09,
    -1.6399139837321565e-09,
    -1.4943460924295832e-09,
    -1.3614779313217941e-09,
    -1.2402212597936399e-09,
    -1.1295806518758921e-09,
    -1.0286427270817283e-09,
    -9.3657304178212041e-10,
    -8.5260631924309165e-10,
    -7.760415646443086e-10,
    -7.0623873440992242e-10,
    -6.4261040953581021e-10,
    -5.846212404780059e-10,
    -5.3177928741305554e-10,
    -4.8363590921567487e-10,
    -4.3978065643280082e-10,
    -3.9983805163679081e-10,
    -3.634654800016521e-10,
    -3.3034819329940985e-10,
    -3.0020141932383876e-10,
    -2.7276192419545972e-10,
    -2.4779123200830124e-10,
    -2.2507107291548799e-10,
    -2.0440149575009061e-10,
    -1.856002018913047e-10,
    -1.6850287833135266e-10,
    -1.5295564815891045e-10,
    -1.3882128780804308e-10,
    -1.2597267674235502e-10,
    -1.142962391463646e-10,
    -1.0368528258735316e-10,
    -9.4044771974369971e-11,
    -8.5287554799946434e-11,
    -7.7333472961675211e-11,
    -7.011025094062897e-11,
    -6.3551719444520005e-11,
    -5.7597815407699564e-11,
    -5.2193582790435016e-11,
    -4.728917257890944e-11,
    -4.2839176651406348e-11,
    -3.8801517555284763e-11,
    -3.513922486381836e-11,
    -3.1817992685541013e-11,
    -2.8805624552734269e-11,
    -2.6074697956686372e-11,
    -2.3599011634013246e-11,
    -2.1355583968102767e-11,
    -1.9321544364645649e-11,
    -1.7479018232943834e-11,
    -1.5809686893089664e-11,
    -1.4298229267342223e-11,
    -1.2928658144145985e-11,
    -1.1688761070229349e-11,
    -1.0566214570018362e-11,
    -9.5494723240564182e-12,
    -8.6296525481461153e-12,
    -7.7977624357876516e-12,
    -7.044143046666503e-12,
    -6.3629101987519405e-12,
    -5.7466253977787849e-12,
    -5.188849350204056e-12,
    -4.6848080970217469e-12,
    -4.2291725677135519e-12,
    -3.8171688032734987e-12,
};

const double tw2_log_sf[tw_grid_knots] = {
    -4.2125044097621988e-37,
    -6.939999431111817e-37,
    -1.141082301770145e-36,
    -1.8724239499169067e-36,
    -3.0663957434169975e-36,
    -5.0117082413741776e-36,
    -8.1751371460252395e-36,
    -1.330887672052758e-35,
    -2.1623909780521653e-35,
    -3.5064717114810305e-35,
    -5.6748516852204012e-35,
    -9.166182470986862e-35,
    -1.477654755098079e-34,
    -2.3774283974742138e-34,
    -3.8176727447884491e-34,
    -6.1185181721900755e-34,
    -9.7869860648248047e-34,
    -1.5624802824876304e-33,
    -2.4896542584957379e-33,
    -3.9593830677272745e-33,
    -6.284643461198033e-33,
    -9.9563352255878257e-33,
    -1.5742959959566461e-32,
    -2.4845276022663604e-32,
    -3.9135622134983106e-32,
    -6.1528327185605976e-32,
    -9.6550128909473631e-32,
    -1.5121936789038825e-31,
    -2.3639610964167342e-31,
    -3.6885302798138922e-31,
    -5.7444530671921497e-31,
    -8.9295053938148617e-31,
    -1.3854546889640446e-30,
    -2.1455752082493699e-30,
    -3.3165367802772962e-30,
    -5.1170115655392674e-30,
    -7.8802527163730034e-30,
    -1.211318848477665e-29,
    -1.8585444379250024e-29,
    -2.8463258522074433e-29,
    -4.3510675355738564e-29,
    -6.6390878751148312e-29,
    -1.0111687357922216e-28,
    -1.5372471817392046e-28,
    -2.3327599465919921e-28,
    -3.5334953892585888e-28,
    -5.3425543768583422e-28,
    -8.0631515101756209e-28,
    -1.214714007265754e-27,
    -1.8266624604834278e-27,
    -2.741949268004998e-27,
    -4.1084602621825196e-27,
    -6.1449598845549185e-27,
    -9.1744687971111502e-27,
    -1.3673088938833444e-26,
    -2.0341256121608912e-26,
    -3.0207604034213721e-26,
    -4.4779956688326647e-26,
    -6.6264624626253909e-26,
    -9.7884137304803726e-26,
    -1.4433678473480919e-25,
    -2.1246026965871864e-25,
    -3.1218787554873984e-25,
    -4.579244047404394e-25,
    -6.7052138483535594e-25,
    -9.8010898243749759e-25,
    -1.4301472504175514e-24,
    -2.0832119010079901e-24,
    -3.0292440453785306e-24,
    -4.3972878571448924e-24,
    -6.3721663614499676e-24,
    -9.2181260633609373e-24,
    -1.3312302747733529e-23,
    -1.9192013993696903e-23,
    -2.7621447547213424e-23,
    -3.9685565779991832e-23,
    -5.6922075654378785e-23,
    -8.1506570316145152e-23,
    -1.165118178730337e-22,
    -1.6627025719270502e-22,
    -2.3687984368283731e-22,
    -3.3690878478797876e-22,
    -4.7837558919489554e-22,
    -6.7810953924724117e-22,
    -9.5963616256673848e-22,
    -1.3557855830574305e-21,
    -1.9122946196913706e-21,
    -2.6927728769351163e-21,
    -3.7855371416726141e-21,
    -5.3130011064054117e-21,
    -7.4445532517823836e-21,
    -1.0414189173967387e-20,
    -1.4544610727670836e-20,
    -2.0280109867188844e-20,
    -2.8231360325809771e-20,
    -3.9236326635608905e-20,
    -5.444295105955037e-20,
    -7.5421208522598792e-20,
    -1.0431471432848964e-19,
    -1.4404548478932979e-19,
    -1.9859003935938517e-19,
    -2.7335104786196251e-19,
    -3.7565678082596758e-19,
    -5.1543116779337093e-19,
    -7.060912100787181e-19,
    -9.6574698568626983e-19,
    -1.3188034715368721e-18,
    -1.7980953135947045e-18,
    -2.4477270152087394e-18,
    -3.3268455136293617e-18,
    -4.5146429519447141e-18,
    -6.1169797999597769e-18,
    -8.2751387421083502e-18,
    -1.1177375973993337e-17,
    -1.507413892008125e-17,
    -2.029808120847e-17,
    -2.7290344213563485e-17,
    -3.6635011955671826e-17,
    -4.9104206341221028e-17,
    -6.571701501834011e-17,
    -8.7816368702666093e-17,
    -1.1716917518332678e-16,
    -1.5609653502753551e-16,
    -2.0764280298258344e-16,
    -2.7579473655661941e-16,
    -3.6576510785234356e-16,
    -4.8435916563205636e-16,
    -6.4044738783446387e-16,
    -8.4557439316295087e-16,
    -1.1147419706114604e-15,
    -1.4674144430820507e-15,
    -1.9288074323812125e-15,
    -2.5315373387902824e-15,
    -3.317729144109048e-15,
    -4.3417057029651484e-15,
    -5.6734135175563316e-15,
    -7.402779929179165e-15,
    -9.6452462614591554e-15,
    -1.2548783412333249e-14,
    -1.6302773238099946e-14,
    -2.1149234499273465e-14,
    -2.7396990398660884e-14,
    -3.5439520912908276e-14,
    -4.5777423585414181e-14,
    -5.9046629103439625e-14,
    -7.6053791742767454e-14,
    -9.7820610999977852e-14,
    -1.2563925405943988e-13,
    -1.6114155307647791e-13,
    -2.0638527026771869e-13,
    -2.6396147652177121e-13,
    -3.371280097543738e-13,
    -4.2997509510484692e-13,
    -5.4763056879257394e-13,
    -6.965137917184325e-13,
    -8.8464933344338611e-13,
    -1.1220539145812788e-12,
    -1.4212130027722921e-12,
    -1.7976669558485151e-12,
    -2.2707308219014311e-12,
    -2.864376952519039e-12,
    -3.6083156560177006e-12,
    -4.5393163584455036e-12,
    -5.7028204188748027e-12,
    -7.1549070691511357e-12,
    -8.9646862697842342e-12,
    -1.121720690207751e-11,
    -1.4016986099954612e-11,
    -1.7492286106906936e-11,
    -2.1800289411967346e-11,
    -2.7133351696216463e-11,
    -3.3726546050749191e-11,
    -4.1866751900560973e-11,
    -5.1903589019305834e-11,
    -6.4262552148895243e-11,
    -7.9460766299863925e-11,
    -9.8125858382225144e-11,
    -1.2101852894959956e-10,
    -1.4905951076453116e-10,
    -1.8336172047961249e-10,
    -2.2526854893046758e-10,
    -2.7639939678878292e-10,
    -3.3870374924134105e-10,
    -4.1452529940861892e-10,
    -5.0667787971959148e-10,
    -6.1853524780039528e-10,
    -7.5413710425577968e-10,
    -9.1831409941068176e-10,
    -1.1168350220922032e-09,
    -1.3565798614504609e-09,
    -1.6457430035929879e-09,
    -1.9940714741122441e-09,
    -2.4131438789423029e-09,
    -2.9166965374028278e-09,
    -3.5210042575806908e-09,
    -4.245324287335046e-09,
    -5.1124131992722621e-09,
    -6.1491278525235647e-09,
    -7.3871231334000541e-09,
    -8.8636609337636236e-09,
    -1.0622546797415838e-08,
    -1.2715212877728612e-08,
    -1.5201968326138816e-08,
    -1.8153440997828501e-08,
    -2.1652237449372433e-08,
    -2.5794851640020725e-08,
    -3.0693856569372752e-08,
    -3.6480417323534647e-08,
    -4.3307168697903181e-08,
    -5.1351505750676875e-08,
    -6.0819341373241987e-08,
    -7.194939126166835e-08,
    -8.5018053609684304e-08,
    -1.0034495844473491e-07,
    -1.1829926985170473e-07,
    -1.3930683342766862e-07,
    -1.6385827122752103e-07,
    -1.9251813725924137e-07,
    -2.2593525831198341e-07,
    -2.6485439760611418e-07,
    -3.1012939249958459e-07,
    -3.6273793231847258e-07,
    -4.2379815835286695e-07,
    -4.9458728520465982e-07,
    -5.765624610925716e-07,
    -6.7138410436202631e-07,
    -7.8094197445415251e-07,
    -9.073842579081946e-07,
    -1.0531499736765714e-06,
    -1.22100502713511e-06,
    -1.4140822686723699e-06,
    -1.6359259406271188e-06,
    -1.8905409256642746e-06,
    -2.1824472403065691e-06,
    -2.5167402493704759e-06,
    -2.8991571102861576e-06,
    -3.3361499908020885e-06,
    -3.8349666391483776e-06,
    -4.4037389223658397e-06,
    -5.0515799860487595e-06,
    -5.7886907269544195e-06,
    -6.6264763088196196e-06,
    -7.577673490877231e-06,
    -8.6564895780000035e-06,
    -9.8787538405712437e-06,
    -1.1262082291180894e-05,
    -1.2826056743466981e-05,
    -1.4592419115598494e-05,
    -1.6585281976901018e-05,
    -1.883135637025099e-05,
    -2.1360197974799571e-05,
    -2.4204472703229574e-05,
    -2.7400242853940915e-05,
    -3.0987274961549751e-05,
    -3.5009370507954452e-05,
    -3.9514720670455632e-05,
    -4.4556286292656294e-05,
    -5.0192204267417939e-05,
    -5.6486221518538614e-05,
    -6.3508157758351591e-05,
    -7.1334398181742602e-05,
    -8.0048417232413593e-05,
    -8.9741334544130307e-05,
    -0.00010051250411767443,
    -0.00011247013774261904,
    -0.0001257319636115658,
    -0.00014042592100258351,
    -0.0001566908918229074,
    -0.00017467746971295902,
    -0.00019454876730475934,
    -0.00021648126211156659,
    -0.00024066568139698762,
    -0.00026730792623144429,
    -0.00029663003479098507,
    -0.00032887118479001581,
    -0.0003642887347632961,
    -0.00040315930372647636,
    -0.00044577988854656997,
    -0.00049246901814664363,
    -0.00054356794345197757,
    -0.00059944186175939392,
    -0.00066048117397830657,
    -0.00072710277295253366,
    -0.00079975136082603986,
    -0.00087890079316748498,
    -0.00096505544731549902,
    -0.0010587516121541836,
    -0.0011605588962755014,
    -0.0012710816512344497,
    -0.0013909604063576332,
    -0.0015208733113239582,
    -0.001661537582505242,
    -0.0018137109488303555,
    -0.0019781930927270292,
    -0.0021558270814976458,
    -0.0023475007843046149,
    -0.0025541482697779556,
    -0.0027767511791138288,
    -0.0030163400694112573,
    -0.0032739957218957806,
    -0.0035508504096050286,
    -0.0038480891190643966,
    -0.0041669507204614917,
    -0.0045087290808377692,
    -0.0048747741148550423,
    -0.005266492767764956,
    -0.0056853499253104664,
    -0.0061328692454211079,
    -0.0066106339067276559,
    -0.0071202872691171351,
    -0.0076635334417751253,
    -0.0082421377544175077,
    -0.0088579271276991063,
    -0.0095127903390983676,
    -0.010208678180916532,
    -0.010947603507389833,
    -0.011731641168302219,
    -0.01256292782688603,
    -0.013443661660225316,
    -0.014376101940810217,
    -0.015362568498343134,
    -0.016405441061355372,
    -0.017507158478660072,
    -0.018670217821134021,
    -0.019897173364794778,
    -0.021190635456601246,
    -0.022553269264872784,
    -0.023987793416669592,
    -0.025496978524922592,
    -0.027083645608523093,
    -0.028750664408997515,
    -0.030500951607776144,
    -0.03233746894843971,
    -0.034263221268665316,
    -0.03628125444691483,
    -0.038394653269200135,
    -0.040606539221515109,
    -0.042920068213763742,
    -0.045338428241204744,
    -0.047864836989606724,
    -0.050502539390440804,
    -0.053254805132542,
    -0.056124926136737349,
    -0.059116213999984679,
    -0.062231997415563615,
    -0.065475619575845148,
    -0.068850435564106249,
    -0.072359809741779912,
    -0.076007113137413873,
    -0.079795720843487114,
    -0.083729009427064197,
    -0.087810354360092976,
    -0.092043127474943642,
    -0.096430694450578419,
    -0.10097641233448307,
    -0.1056836271052691,
    -0.11055567128055789,
    -0.11559586157451565,
    -0.12080749660909795,
    -0.12619385468278871,
    -0.13175819160031796,
    -0.13750373856653964,
    -0.1434337001473619,
    -0.14955125230030944,
    -0.15585954047701936,
    -0.16236167779964433,
    -0.16906074331289583,
    -0.17595978031312803,
    -0.18306179475562065,
    -0.19036975374093176,
    -0.19788658408095028,
    -0.20561517094500298,
    -0.21355835658616032,
    -0.22171893914763902,
    -0.23009967154898944,
    -0.23870326045155327,
    -0.24753236530248354,
    -0.25658959745643589,
    -0.26587751937388421,
    -0.27539864389484353,
    -0.28515543358666273,
    -0.29515030016438776,
    -0.30538560398212572,
    -0.3158636535936758,
    -0.3265867053806627,
    -0.33755696324626938,
    -0.34877657837263232,
    -0.3602476490398871,
    -0.37197222050479534,
    -0.3839522849368594,
    -0.39618978140978051,
    -0.40868659594611012,
    -0.42144456161290728,
    -0.43446545866623781,
    -0.44775101474231632,
    -0.46130290509311656,
    -0.47512275286430383,
    -0.48921212941331521,
    -0.50357255466548767,
    -0.5182054975061261,
    -0.53311237620645902,
    -0.54829455888144529,
    -0.56375336397745268,
    -0.57949006078785781,
    -0.59550586999468769,
    -0.6118019642344239,
    -0.62837946868619377,
    -0.64523946168058777,
    -0.66238297532741464,
    -0.67981099616074314,
    -0.69752446579965877,
    -0.71552428162317994,
    -0.73381129745789064,
    -0.75238632427685248,
    -0.77125013090840466,
    -0.79040344475361757,
    -0.80984695251105732,
    -0.82958130090775173,
    -0.84960709743513774,
    -0.86992491108894088,
    -0.89053527311194047,
    -0.91143867773865062,
    -0.93263558294094007,
    -0.95412641117373076,
    -0.9759115501199358,
    -0.99799135343385559,
    -1.0203661414822276,
    -1.0430362020823198,
    -1.0660017912363025,
    -1.0892631338613912,
    -1.1128204245150566,
    -1.1366738281148852,
    -1.1608234806524897,
    -1.1852694899010583,
    -1.2100119361160993,
    -1.2350508727289478,
    -1.2603863270327356,
    -1.2860183008603814,
    -1.311946771254425,
    -1.3381716911283077,
    -1.3646929899189049,
    -1.3915105742300851,
    -1.4186243284670319,
    -1.4460341154612657,
    -1.4737397770860403,
    -1.5017411348621343,
    -1.5300379905538128,
    -1.5586301267549387,
    -1.5875173074650468,
    -1.6166992786554157,
    -1.6461757688250591,
    -1.6759464895465574,
    -1.7060111360017456,
    -1.7363693875072912,
    -1.7670209080300356,
    -1.7979653466922889,
    -1.8292023382669667,
    -1.8607315036626466,
    -1.8925524503986293,
    -1.9246647730700128,
    -1.957068053802886,
    -1.9897618626996354,
    -2.0227457582745316,
    -2.0560192878796677,
    -2.089581988121243,
    -2.1234333852665008,
    -2.1575729956410501,
    -2.1920003260171761,
    -2.2267148739927949,
    -2.2617161283615044,
    -2.2970035694735094,
    -2.3325766695879571,
    -2.3684348932163757,
    -2.4045776974577868,
    -2.441004532325084,
    -2.4777148410633627,
    -2.5147080604600029,
    -2.5519836211466496,
    -2.5895409478932887,
    -2.6273794598947133,
    -2.6654985710491292,
    -2.703897690229415,
    -2.7425762215469693,
    -2.7815335646082389,
    -2.8207691147644094,
    -2.8602822633538203,
    -2.9000723979378358,
    -2.9401389025298159,
    -2.9804811578177253,
    -3.0210985413800606,
    -3.0619904278958714,
    -3.1031561893483492,
    -3.1445951952223323,
    -3.1863068126961651,
    -3.2282904068277558,
    -3.270545340734643,
    -3.3130709757692283,
    -3.3558666716877172,
    -3.3989317868147082,
    -3.4422656782020424,
    -3.4858677017827082,
    -3.5297372125202267,
    -3.5738735645526352,
    -3.618276111332289,
    -3.6629442057608337,
    -3.7078772003198939,
    -3.7530744471973225,
    -3.7985352984091056,
    -3.8442591059176152,
    -3.8902452217448333,
    -3.9364929980831547,
    -3.983001787400851,
    -4.0297709425445776,
    -4.0767998168383111,
    -4.1240877641787463,
    -4.171634139126815,
    -4.2194382969958211,
    -4.2674995939379707,
    -4.3158173870243246,
    -4.3643910343257231,
    -4.4132198949878232,
    -4.4623033293039231,
    -4.5116406987853157,
    -4.5612313662294666,
    -4.6110746957839064,
    -4.6611700530079103,
    -4.7115168049341269,
    -4.7621143201231533,
    -4.8129619687207343,
    -4.8640591225085714,
    -4.9154051549546267,
    -4.9669994412626233,
    -5.0188413584164264,
    -5.0709302852239384,
    -5.1232656023597745,
    -5.1758466924052904,
    -5.2286729398855947,
    -5.2817437313063698,
    -5.3350584551882863,
    -5.3886165021000423,
    -5.4424172646886841,
    -5.4964601377110407,
    -5.5507445180580772,
    -5.6052698047845269,
    -5.660035399133676,
    -5.7150407045586578,
    -5.7702851267464057,
    -5.8257680736389483,
    -5.8814889554515384,
    -5.937447184691953,
    -5.9936421761777883,
    -6.0500733470513337,
    -6.1067401167949065,
    -6.1636419072474968,
    -6.2207781426120761,
    -6.278148249472836,
    -6.3357516567990615,
    -6.3935877959659404,
    -6.4516561007515367,
    -6.5099560073533587,
    -6.5684869543901394,
    -6.6272483829116107,
    -6.6862397364031487,
    -6.7454604607916897,
    -6.8049100044451576,
    -6.8645878181832183,
    -6.9244933552750556,
    -6.9846260714391315,
    -7.0449854248542962,
    -7.105570876149125,
    -7.1663818884115482,
    -7.2274179271804497,
    -7.2886784604484873,
    -7.3501629586672523,
    -7.4118708947326768,
    -7.4738017439946152,
    -7.5359549842397682,
    -7.5983300957080999,
    -7.660926561075545,
    -7.7237438654461492,
    -7.7867814963614768,
    -7.8500389437801941,
    -7.9135157000941536,
    -7.9772112600939842,
    -8.041125120998883,
    -8.1052567824107147,
    -8.169605746334069,
    -8.2341715171709282,
    -8.2989536016915064,
    -8.3639515090574275,
    -8.4291647507805116,
    -8.4945928407473534,
    -8.5602352951759819,
    -8.6260916326586479,
    -8.6921613740945887,
    -8.7584440427130996,
    -8.8249391640754418,
    -8.8916462660505236,
    -8.9585648787676249,
    -9.025694534704698,
    -9.0930347685781765,
    -9.1605851173905197,
    -9.2283451204086173,
    -9.2963143191279389,
    -9.364492257309788,
    -9.4328784809375481,
    -9.5014725382409235,
    -9.5702739795891603,
    -9.6392823576262945,
    -9.7084972271366574,
    -9.7779181451188464,
    -9.8475446707014669,
    -9.9173763652315401,
    -9.9874127921362632,
    -10.057653516983599,
    -10.12809810752988,
    -10.198746133574955,
    -10.269597167075361,
    -10.340650782051432,
    -10.411906554558064,
    -10.483364062878483,
    -10.555022887107032,
    -10.626882609588304,
    -10.698942814723496,
    -10.771203088769145,
    -10.843663020053679,
    -10.916322198986007,
    -10.989180217908363,
    -11.062236671108506,
    -11.135491155018709,
    -11.208943267849092,
    -11.282592609632543,
    -11.356438782727636,
    -11.430481391056105,
    -11.504720040774524,
    -11.579154339610085,
    -11.653783897311589,
    -11.728608325801408,
    -11.803627238244175,
    -11.878840250405931,
    -11.954246979236803,
    -12.029847043955183,
    -12.105640065054271,
    -12.181625665939611,
    -12.257803470574521,
    -12.334173105697413,
    -12.410734198933808,
    -12.487486380305786,
    -12.564429281798697,
    -12.641562536320084,
    -12.718885779051943,
    -12.796398646730928,
    -12.87410077872795,
    -12.951991814125726,
    -13.030071395416096,
    -13.108339167122551,
    -13.186794772947467,
    -13.265437860954096,
    -13.344268079291188,
    -13.423285077788172,
    -13.502488510874013,
    -13.581878029009456,
    -13.661453288499816,
    -13.741213946525006,
    -13.821159660927913,
    -13.901290092186958,
    -13.981604902408204,
    -14.062103752689801,
    -14.142786308985841,
    -14.223652237416584,
    -14.304701206888947,
    -14.385932884137318,
    -14.467346941058493,
    -14.548943049852848,
    -14.630720885578505,
    -14.712680121798529,
    -14.794820438260059,
    -14.877141508558552,
    -14.959643012879788,
    -15.042324638088294,
    -15.125186061078065,
    -15.208226965343069,
    -15.291447043460442,
    -15.374845973977751,
    -15.458423452588736,
    -15.542179163392934,
    -15.6261127953506,
    -15.710224052683564,
    -15.794512618080629,
    -15.878978186255985,
    -15.963620462510033,
    -16.048439137440248,
    -16.133433906578972,
    -16.218604486097664,
    -16.303950571853111,
    -16.38947184975158,
    -16.475168044628045,
    -16.561038851692778,
    -16.647083973626117,
    -16.733303138559421,
    -16.81969603431817,
    -16.906262389702047,
    -16.993001913783733,
    -17.079914304052831,
    -17.166999300412947,
    -17.254256580370662,
    -17.341685899288603,
    -17.429286963665973,
    -17.517059489740454,
    -17.605003197115408,
    -17.693117819583549,
    -17.781403067539383,
    -17.869858675433075,
    -17.958484340253762,
    -18.047279820354849,
    -18.136244817625187,
    -18.225379133782599,
    -18.314682359374711,
    -18.404154340486812,
    -18.493794818536866,
    -18.583603453801416,
    -18.673580006452625,
    -18.763724201827024,
    -18.854035836111699,
    -18.944514576777138,
    -19.035160159235328,
    -19.12597247772198,
    -19.216950975134594,
    -19.308095638119102,
    -19.399406198515379,
    -19.490882399880174,
    -19.582523755529383,
    -19.674330180317725,
    -19.766301655962565,
    -19.858437412124644,
    -19.950737606939228,
    -20.043202058436641,
    -20.135830043006777,
    -20.228622046249562,
    -20.321577122904799,
    -20.414695013718436,
    -20.507976038549813,
    -20.601419378197889,
    -20.695025644900294,
    -20.788793603125779,
    -20.882723200318754,
    -20.976815034881813,
    -21.071067785226226,
    -21.165482470608403,
    -21.260056930851025,
    -21.354792586220256,
    -21.449688746225139,
    -21.54474502163988,
    -21.639961521910863,
    -21.735336789253786,
    -21.83087388668255,
    -21.926567468962954,
    -22.022421773900554,
    -22.118434530823595,
    -22.214604884091738,
    -22.310934939968234,
    -22.407426207893412,
    -22.5040682842811,
    -22.600873117950609,
    -22.697833709310338,
    -22.794956083806838,
    -22.89222744908265,
    -22.989660933793271,
    -23.087250149499582,
    -23.184992571297876,
    -23.28289422743174,
    -23.380952099509528,
    -23.479167062128806,
    -23.577536475924408,
    -23.676061563672324,
    -23.77473975619489,
    -23.873568089709956,
    -23.972561757833979,
    -24.07170309194445,
    -24.170989178445748,
    -24.27045045089908,
    -24.37005569875803,
    -24.469816284700464,
    -24.569707866287875,
    -24.669800354290292,
    -24.770019912450618,
    -24.870398269269835,
    -24.970885413795674,
    -25.071574707024929,
    -25.172393328083214,
    -25.273359509805783,
    -25.374535216992751,
    -25.475816872581262,
    -25.577184290597881,
    -25.678824617913946,
    -25.780535264816663,
    -25.88240832075077,
    -25.984509148496564,
    -26.086696162227408,
    -26.189014752476307,
    -26.291512119075662,
};

} // namespace twroot::detail
