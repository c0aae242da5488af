// Copyright 2026 The AutoVE Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTOVE_TESTS_SOBOL_REFERENCE_HPP_
#define AUTOVE_TESTS_SOBOL_REFERENCE_HPP_

// First 64 points (origin skipped) of the unscrambled 16-dimensional Sobol
// sequence, produced by scipy.stats.qmc.Sobol(d=16, scramble=False); see
// tests/data/make_sobol_reference.py.
inline constexpr double kSobolReference[64][16] = {
    {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
    {0.75, 0.25, 0.25, 0.25, 0.75, 0.75, 0.25, 0.75, 0.75, 0.75, 0.75, 0.75, 0.25, 0.25, 0.75, 0.25},
    {0.25, 0.75, 0.75, 0.75, 0.25, 0.25, 0.75, 0.25, 0.25, 0.25, 0.25, 0.25, 0.75, 0.75, 0.25, 0.75},
    {0.375, 0.375, 0.625, 0.875, 0.375, 0.125, 0.375, 0.875, 0.875, 0.625, 0.875, 0.375, 0.375, 0.625, 0.375, 0.875},
    {0.875, 0.875, 0.125, 0.375, 0.875, 0.625, 0.875, 0.375, 0.375, 0.125, 0.375, 0.875, 0.875, 0.125, 0.875, 0.375},
    {0.625, 0.125, 0.875, 0.625, 0.625, 0.875, 0.125, 0.125, 0.125, 0.375, 0.125, 0.625, 0.125, 0.875, 0.625, 0.625},
    {0.125, 0.625, 0.375, 0.125, 0.125, 0.375, 0.625, 0.625, 0.625, 0.875, 0.625, 0.125, 0.625, 0.375, 0.125, 0.125},
    {0.1875, 0.3125, 0.9375, 0.4375, 0.5625, 0.3125, 0.4375, 0.9375, 0.9375, 0.3125, 0.6875, 0.0625, 0.9375, 0.9375, 0.8125, 0.9375},
    {0.6875, 0.8125, 0.4375, 0.9375, 0.0625, 0.8125, 0.9375, 0.4375, 0.4375, 0.8125, 0.1875, 0.5625, 0.4375, 0.4375, 0.3125, 0.4375},
    {0.9375, 0.0625, 0.6875, 0.1875, 0.3125, 0.5625, 0.1875, 0.1875, 0.1875, 0.5625, 0.4375, 0.8125, 0.6875, 0.6875, 0.0625, 0.6875},
    {0.4375, 0.5625, 0.1875, 0.6875, 0.8125, 0.0625, 0.6875, 0.6875, 0.6875, 0.0625, 0.9375, 0.3125, 0.1875, 0.1875, 0.5625, 0.1875},
    {0.3125, 0.1875, 0.3125, 0.5625, 0.9375, 0.4375, 0.0625, 0.0625, 0.0625, 0.9375, 0.3125, 0.4375, 0.5625, 0.3125, 0.6875, 0.0625},
    {0.8125, 0.6875, 0.8125, 0.0625, 0.4375, 0.9375, 0.5625, 0.5625, 0.5625, 0.4375, 0.8125, 0.9375, 0.0625, 0.8125, 0.1875, 0.5625},
    {0.5625, 0.4375, 0.0625, 0.8125, 0.1875, 0.6875, 0.3125, 0.8125, 0.8125, 0.1875, 0.5625, 0.6875, 0.8125, 0.0625, 0.4375, 0.3125},
    {0.0625, 0.9375, 0.5625, 0.3125, 0.6875, 0.1875, 0.8125, 0.3125, 0.3125, 0.6875, 0.0625, 0.1875, 0.3125, 0.5625, 0.9375, 0.8125},
    {0.09375, 0.46875, 0.46875, 0.65625, 0.28125, 0.96875, 0.53125, 0.84375, 0.46875, 0.15625, 0.09375, 0.40625, 0.65625, 0.65625, 0.34375, 0.03125},
    {0.59375, 0.96875, 0.96875, 0.15625, 0.78125, 0.46875, 0.03125, 0.34375, 0.96875, 0.65625, 0.59375, 0.90625, 0.15625, 0.15625, 0.84375, 0.53125},
    {0.84375, 0.21875, 0.21875, 0.90625, 0.53125, 0.21875, 0.78125, 0.09375, 0.71875, 0.90625, 0.84375, 0.65625, 0.90625, 0.90625, 0.59375, 0.28125},
    {0.34375, 0.71875, 0.71875, 0.40625, 0.03125, 0.71875, 0.28125, 0.59375, 0.21875, 0.40625, 0.34375, 0.15625, 0.40625, 0.40625, 0.09375, 0.78125},
    {0.46875, 0.09375, 0.84375, 0.28125, 0.15625, 0.84375, 0.90625, 0.21875, 0.59375, 0.53125, 0.96875, 0.03125, 0.78125, 0.03125, 0.21875, 0.90625},
    {0.96875, 0.59375, 0.34375, 0.78125, 0.65625, 0.34375, 0.40625, 0.71875, 0.09375, 0.03125, 0.46875, 0.53125, 0.28125, 0.53125, 0.71875, 0.40625},
    {0.71875, 0.34375, 0.59375, 0.03125, 0.90625, 0.09375, 0.65625, 0.96875, 0.34375, 0.28125, 0.21875, 0.78125, 0.53125, 0.28125, 0.96875, 0.65625},
    {0.21875, 0.84375, 0.09375, 0.53125, 0.40625, 0.59375, 0.15625, 0.46875, 0.84375, 0.78125, 0.71875, 0.28125, 0.03125, 0.78125, 0.46875, 0.15625},
    {0.15625, 0.15625, 0.53125, 0.84375, 0.84375, 0.65625, 0.96875, 0.15625, 0.53125, 0.46875, 0.65625, 0.46875, 0.34375, 0.34375, 0.53125, 0.96875},
    {0.65625, 0.65625, 0.03125, 0.34375, 0.34375, 0.15625, 0.46875, 0.65625, 0.03125, 0.96875, 0.15625, 0.96875, 0.84375, 0.84375, 0.03125, 0.46875},
    {0.90625, 0.40625, 0.78125, 0.59375, 0.09375, 0.40625, 0.71875, 0.90625, 0.28125, 0.71875, 0.40625, 0.71875, 0.09375, 0.09375, 0.28125, 0.71875},
    {0.40625, 0.90625, 0.28125, 0.09375, 0.59375, 0.90625, 0.21875, 0.40625, 0.78125, 0.21875, 0.90625, 0.21875, 0.59375, 0.59375, 0.78125, 0.21875},
    {0.28125, 0.28125, 0.15625, 0.21875, 0.71875, 0.53125, 0.59375, 0.78125, 0.40625, 0.84375, 0.28125, 0.09375, 0.21875, 0.96875, 0.90625, 0.09375},
    {0.78125, 0.78125, 0.65625, 0.71875, 0.21875, 0.03125, 0.09375, 0.28125, 0.90625, 0.34375, 0.78125, 0.59375, 0.71875, 0.46875, 0.40625, 0.59375},
    {0.53125, 0.03125, 0.40625, 0.46875, 0.46875, 0.28125, 0.84375, 0.03125, 0.65625, 0.09375, 0.53125, 0.84375, 0.46875, 0.71875, 0.15625, 0.34375},
    {0.03125, 0.53125, 0.90625, 0.96875, 0.96875, 0.78125, 0.34375, 0.53125, 0.15625, 0.59375, 0.03125, 0.34375, 0.96875, 0.21875, 0.65625, 0.84375},
    {0.046875, 0.265625, 0.703125, 0.546875, 0.140625, 0.921875, 0.796875, 0.671875, 0.984375, 0.046875, 0.390625, 0.953125, 0.453125, 0.984375, 0.984375, 0.109375},
    {0.546875, 0.765625, 0.203125, 0.046875, 0.640625, 0.421875, 0.296875, 0.171875, 0.484375, 0.546875, 0.890625, 0.453125, 0.953125, 0.484375, 0.484375, 0.609375},
    {0.796875, 0.015625, 0.953125, 0.796875, 0.890625, 0.171875, 0.546875, 0.421875, 0.234375, 0.796875, 0.640625, 0.203125, 0.203125, 0.734375, 0.234375, 0.359375},
    {0.296875, 0.515625, 0.453125, 0.296875, 0.390625, 0.671875, 0.046875, 0.921875, 0.734375, 0.296875, 0.140625, 0.703125, 0.703125, 0.234375, 0.734375, 0.859375},
    {0.421875, 0.140625, 0.078125, 0.421875, 0.265625, 0.796875, 0.671875, 0.296875, 0.109375, 0.671875, 0.515625, 0.578125, 0.078125, 0.359375, 0.609375, 0.984375},
    {0.921875, 0.640625, 0.578125, 0.921875, 0.765625, 0.296875, 0.171875, 0.796875, 0.609375, 0.171875, 0.015625, 0.078125, 0.578125, 0.859375, 0.109375, 0.484375},
    {0.671875, 0.390625, 0.328125, 0.171875, 0.515625, 0.046875, 0.921875, 0.546875, 0.859375, 0.421875, 0.265625, 0.328125, 0.328125, 0.109375, 0.359375, 0.734375},
    {0.171875, 0.890625, 0.828125, 0.671875, 0.015625, 0.546875, 0.421875, 0.046875, 0.359375, 0.921875, 0.765625, 0.828125, 0.828125, 0.609375, 0.859375, 0.234375},
    {0.234375, 0.078125, 0.265625, 0.984375, 0.703125, 0.734375, 0.734375, 0.359375, 0.046875, 0.359375, 0.828125, 0.890625, 0.515625, 0.046875, 0.171875, 0.921875},
    {0.734375, 0.578125, 0.765625, 0.484375, 0.203125, 0.234375, 0.234375, 0.859375, 0.546875, 0.859375, 0.328125, 0.390625, 0.015625, 0.546875, 0.671875, 0.421875},
    {0.984375, 0.328125, 0.015625, 0.734375, 0.453125, 0.484375, 0.984375, 0.609375, 0.796875, 0.609375, 0.078125, 0.140625, 0.765625, 0.296875, 0.921875, 0.671875},
    {0.484375, 0.828125, 0.515625, 0.234375, 0.953125, 0.984375, 0.484375, 0.109375, 0.296875, 0.109375, 0.578125, 0.640625, 0.265625, 0.796875, 0.421875, 0.171875},
    {0.359375, 0.453125, 0.890625, 0.109375, 0.828125, 0.609375, 0.859375, 0.734375, 0.921875, 0.984375, 0.203125, 0.515625, 0.890625, 0.671875, 0.296875, 0.046875},
    {0.859375, 0.953125, 0.390625, 0.609375, 0.328125, 0.109375, 0.359375, 0.234375, 0.421875, 0.484375, 0.703125, 0.015625, 0.390625, 0.171875, 0.796875, 0.546875},
    {0.609375, 0.203125, 0.640625, 0.359375, 0.078125, 0.359375, 0.609375, 0.484375, 0.171875, 0.234375, 0.953125, 0.265625, 0.640625, 0.921875, 0.546875, 0.296875},
    {0.109375, 0.703125, 0.140625, 0.859375, 0.578125, 0.859375, 0.109375, 0.984375, 0.671875, 0.734375, 0.453125, 0.765625, 0.140625, 0.421875, 0.046875, 0.796875},
    {0.078125, 0.234375, 0.796875, 0.140625, 0.421875, 0.078125, 0.265625, 0.453125, 0.515625, 0.140625, 0.484375, 0.609375, 0.859375, 0.328125, 0.640625, 0.078125},
    {0.578125, 0.734375, 0.296875, 0.640625, 0.921875, 0.578125, 0.765625, 0.953125, 0.015625, 0.640625, 0.984375, 0.109375, 0.359375, 0.828125, 0.140625, 0.578125},
    {0.828125, 0.484375, 0.546875, 0.390625, 0.671875, 0.828125, 0.015625, 0.703125, 0.265625, 0.890625, 0.734375, 0.359375, 0.609375, 0.078125, 0.390625, 0.328125},
    {0.328125, 0.984375, 0.046875, 0.890625, 0.171875, 0.328125, 0.515625, 0.203125, 0.765625, 0.390625, 0.234375, 0.859375, 0.109375, 0.578125, 0.890625, 0.828125},
    {0.453125, 0.359375, 0.421875, 0.765625, 0.046875, 0.203125, 0.140625, 0.578125, 0.390625, 0.515625, 0.609375, 0.984375, 0.734375, 0.953125, 0.765625, 0.953125},
    {0.953125, 0.859375, 0.921875, 0.265625, 0.546875, 0.703125, 0.640625, 0.078125, 0.890625, 0.015625, 0.109375, 0.484375, 0.234375, 0.453125, 0.265625, 0.453125},
    {0.703125, 0.109375, 0.171875, 0.515625, 0.796875, 0.953125, 0.390625, 0.328125, 0.640625, 0.265625, 0.359375, 0.234375, 0.984375, 0.703125, 0.015625, 0.703125},
    {0.203125, 0.609375, 0.671875, 0.015625, 0.296875, 0.453125, 0.890625, 0.828125, 0.140625, 0.765625, 0.859375, 0.734375, 0.484375, 0.203125, 0.515625, 0.203125},
    {0.140625, 0.421875, 0.234375, 0.328125, 0.984375, 0.265625, 0.203125, 0.515625, 0.453125, 0.453125, 0.796875, 0.546875, 0.171875, 0.640625, 0.453125, 0.890625},
    {0.640625, 0.921875, 0.734375, 0.828125, 0.484375, 0.765625, 0.703125, 0.015625, 0.953125, 0.953125, 0.296875, 0.046875, 0.671875, 0.140625, 0.953125, 0.390625},
    {0.890625, 0.171875, 0.484375, 0.078125, 0.234375, 0.515625, 0.453125, 0.265625, 0.703125, 0.703125, 0.046875, 0.296875, 0.421875, 0.890625, 0.703125, 0.640625},
    {0.390625, 0.671875, 0.984375, 0.578125, 0.734375, 0.015625, 0.953125, 0.765625, 0.203125, 0.203125, 0.546875, 0.796875, 0.921875, 0.390625, 0.203125, 0.140625},
    {0.265625, 0.046875, 0.609375, 0.703125, 0.609375, 0.390625, 0.328125, 0.390625, 0.578125, 0.828125, 0.171875, 0.921875, 0.296875, 0.015625, 0.078125, 0.015625},
    {0.765625, 0.546875, 0.109375, 0.203125, 0.109375, 0.890625, 0.828125, 0.890625, 0.078125, 0.328125, 0.671875, 0.421875, 0.796875, 0.515625, 0.578125, 0.515625},
    {0.515625, 0.296875, 0.859375, 0.953125, 0.359375, 0.640625, 0.078125, 0.640625, 0.328125, 0.078125, 0.921875, 0.171875, 0.046875, 0.265625, 0.828125, 0.265625},
    {0.015625, 0.796875, 0.359375, 0.453125, 0.859375, 0.140625, 0.578125, 0.140625, 0.828125, 0.578125, 0.421875, 0.671875, 0.546875, 0.765625, 0.328125, 0.765625},
    {0.0234375, 0.3984375, 0.8203125, 0.8359375, 0.6484375, 0.4453125, 0.6640625, 0.2109375, 0.7421875, 0.1171875, 0.9453125, 0.2265625, 0.4296875, 0.5234375, 0.8046875, 0.5078125},
};

#endif  // AUTOVE_TESTS_SOBOL_REFERENCE_HPP_
