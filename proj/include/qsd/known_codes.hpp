// Copyright 2026 The qsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Published codes, enumerator coefficients and bounds, embedded as text.
//
// Line kinds:
//   <table> <name> <claims...> <construction record>
//       table is one of T2 T3 T4 T5 T32-1 T32-2 T32-3 T9 G; claims are
//       key=value pairs such as d=8, A8=513 or k=45.
//   W56 i=<weight> c=<constant> alpha=<coeff> beta=<coeff>
//       the possible weight enumerator of a self-dual [56,28,16] code.
//   DK n=<n> d=<d>                      largest previously known minimum weight
//   DN n=<n> lo=<lo> hi=<hi>            range for the largest minimum weight
//   DMU n=<n> mu=<s> lo=<lo> hi=<hi>    the same, restricted to four-circulant codes
//   D4 n=56 k=28 lo=<lo> hi=<hi>        linear [56,28] codes
//   DMAX n=56 k=0 lo=<lo> hi=<hi>       quantum [[56,0,d]] codes

#ifndef QSD_KNOWN_CODES_HPP
#define QSD_KNOWN_CODES_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsd/constructions.hpp"

namespace qsd {

inline std::string_view known_dataset() {
    static constexpr std::string_view kData = R"QSD(
T2 C_{24,1,1} d=8 A8=513 type=m4c mu=1 rA=101011 rB=wvw101
T2 C_{24,1,2} d=8 A8=594 type=m4c mu=1 rA=1w11w1 rB=w1w101
T2 C_{24,1,3} d=8 A8=594 type=m4c mu=1 rA=1vv0w1 rB=v00v00
T2 C_{24,1,4} d=8 A8=837 type=m4c mu=1 rA=0110ww rB=wvw101
T2 C_{24,1,5} d=8 A8=837 type=m4c mu=1 rA=0110ww rB=111000
T2 C_{24,1,6} d=8 A8=837 type=m4c mu=1 rA=1110wv rB=1w1100
T2 C_{24,1,7} d=8 A8=837 type=m4c mu=1 rA=1vvv1v rB=vvv000
T2 C_{24,w,1} d=8 A8=513 type=m4c mu=w rA=1vv1vw rB=v00v10
T2 C_{24,w,2} d=8 A8=513 type=m4c mu=w rA=111wv0 rB=v01vw0
T2 C_{24,w,3} d=8 A8=513 type=m4c mu=w rA=1vv1v0 rB=w0vv10
T2 C_{24,w,4} d=8 A8=513 type=m4c mu=w rA=1vv1w0 rB=000v10
T2 C_{24,w,5} d=8 A8=513 type=m4c mu=w rA=111w0v rB=1wv1ww
T2 C_{24,w,6} d=8 A8=513 type=m4c mu=w rA=1vv11v rB=wwvw10
T2 C_{24,w,7} d=8 A8=513 type=m4c mu=w rA=1vv1w1 rB=00ww10
T2 C_{24,w,8} d=8 A8=513 type=m4c mu=w rA=011wvv rB=w01vw0
T2 C_{24,w,9} d=8 A8=513 type=m4c mu=w rA=01wv00 rB=1v01v0
T2 C_{24,v,1} d=8 A8=513 type=m4c mu=v rA=00110w rB=vv1vvw
T2 C_{24,v,2} d=8 A8=513 type=m4c mu=v rA=10vvv1 rB=0w0vw1
T2 C_{24,v,3} d=8 A8=513 type=m4c mu=v rA=10vv10 rB=0w1ww1
T2 C_{24,v,4} d=8 A8=513 type=m4c mu=v rA=001100 rB=www0vw
T2 C_{24,v,5} d=8 A8=513 type=m4c mu=v rA=001100 rB=w01wvw
T2 C_{24,v,6} d=8 A8=513 type=m4c mu=v rA=001111 rB=v0v1vw
T2 C_{24,v,7} d=8 A8=513 type=m4c mu=v rA=0011v0 rB=wvvvvw
T2 C_{24,v,8} d=8 A8=513 type=m4c mu=v rA=001110 rB=vwv1vw
T2 C_{24,v,9} d=8 A8=513 type=m4c mu=v rA=001110 rB=0w10vw
T3 C_{28,1,1} d=10 type=m4c mu=1 rA=01v010v rB=vwvw00v
T3 C_{28,1,2} d=10 type=m4c mu=1 rA=1w10w00 rB=vv1ww11
T3 C_{28,1,3} d=10 type=m4c mu=1 rA=01w0v00 rB=w1w110w
T3 C_{28,w,1} d=10 type=m4c mu=w rA=1ww0w01 rB=w00vw0w
T3 C_{28,w,2} d=10 type=m4c mu=w rA=1ww0w00 rB=1vvww1w
T3 C_{28,w,3} d=10 type=m4c mu=w rA=01w0w00 rB=vw0w11w
T3 C_{28,v,1} d=10 type=m4c mu=v rA=10vwv01 rB=w00011v
T3 C_{28,v,2} d=10 type=m4c mu=v rA=1w1v11w rB=v0v00w1
T3 C_{28,v,3} d=10 type=m4c mu=v rA=1vvwv01 rB=0vv000v
T4 C_{36,1,1} d=12 A12=20844 type=m4c mu=1 rA=111111wvw rB=110010100
T4 C_{36,w,1} d=12 A12=19548 type=m4c mu=w rA=1w1111v11 rB=1wvv0v100
T4 C_{36,v,1} d=12 A12=19548 type=m4c mu=v rA=1v1111w11 rB=1vww0w100
T5 C_{40,1} d=12 A12=5220 type=m4c mu=1 rA=1001v10010 rB=ww11ww0ww0
T5 C_{40,w} d=12 A12=5130 type=m4c mu=w rA=1vv111wvvv rB=w10wvwwv00
T5 C_{40,v} d=12 A12=5040 type=m4c mu=v rA=1wwwvvwv0w rB=1w01v0v0w0
T5 C_{44,1} d=12 A12=1188 type=m4c mu=1 rA=1wv00w0vw1w rB=vwvwwv0w000
T5 C_{44,w} d=12 A12=1551 type=m4c mu=w rA=100vw1v0w10 rB=v0v0w00v1w0
T5 C_{44,v} d=12 A12=1749 type=m4c mu=v rA=10v0111w0vw rB=w1vv0vvwwv0
T32-1 C_{32,1,1} d=10 A10=1200 type=m4c mu=1 rA=01000vvw rB=wv1w101w
T32-1 C_{32,1,2} d=10 A10=1200 type=m4c mu=1 rA=01100vww rB=1vwv001w
T32-1 C_{32,1,3} d=10 A10=1200 type=m4c mu=1 rA=01100vww rB=wv0v101w
T32-1 C_{32,1,4} d=10 A10=1344 type=m4c mu=1 rA=1w1001w1 rB=0w10101w
T32-1 C_{32,1,5} d=10 A10=1344 type=m4c mu=1 rA=1w100vwv rB=vvww011w
T32-1 C_{32,1,6} d=10 A10=1392 type=m4c mu=1 rA=01010vw1 rB=wvww111w
T32-1 C_{32,1,7} d=10 A10=1392 type=m4c mu=1 rA=1v0001w1 rB=1w0v10v1
T32-1 C_{32,1,8} d=10 A10=1392 type=m4c mu=1 rA=01010www rB=vvw1111w
T32-1 C_{32,1,9} d=10 A10=1392 type=m4c mu=1 rA=01100ww0 rB=w1ww101w
T32-1 C_{32,1,10} d=10 A10=1488 type=m4c mu=1 rA=1vw001ww rB=10w0w0wv
T32-1 C_{32,1,11} d=10 A10=1488 type=m4c mu=1 rA=1vv00vww rB=ww1w10v1
T32-1 C_{32,1,12} d=10 A10=1488 type=m4c mu=1 rA=101001vw rB=v0v1101w
T32-1 C_{32,1,13} d=10 A10=1488 type=m4c mu=1 rA=01000vvw rB=wvwww01w
T32-1 C_{32,1,14} d=10 A10=1536 type=m4c mu=1 rA=01000vw0 rB=vwv1v11w
T32-1 C_{32,1,15} d=10 A10=1632 type=m4c mu=1 rA=01000w1v rB=vww1101w
T32-1 C_{32,1,16} d=10 A10=1632 type=m4c mu=1 rA=1vv001vw rB=v0v0w0v1
T32-1 C_{32,1,17} d=10 A10=1632 type=m4c mu=1 rA=1v0v0v11 rB=wv1v10v1
T32-1 C_{32,1,18} d=10 A10=1632 type=m4c mu=1 rA=010v0wvv rB=w1wvwvv1
T32-1 C_{32,1,19} d=10 A10=1632 type=m4c mu=1 rA=10v00v01 rB=v01010v1
T32-1 C_{32,1,20} d=10 A10=1632 type=m4c mu=1 rA=1100011w rB=v11vw11w
T32-1 C_{32,1,21} d=10 A10=1680 type=m4c mu=1 rA=010001ww rB=w1wvw01w
T32-1 C_{32,1,22} d=10 A10=1680 type=m4c mu=1 rA=01000v1w rB=wwvvv01w
T32-1 C_{32,1,23} d=10 A10=1680 type=m4c mu=1 rA=11000v10 rB=vvwvw01w
T32-1 C_{32,1,24} d=10 A10=1680 type=m4c mu=1 rA=00100www rB=v11ww01w
T32-1 C_{32,1,25} d=10 A10=1680 type=m4c mu=1 rA=10100vw1 rB=1w11v11w
T32-1 C_{32,1,26} d=10 A10=1680 type=m4c mu=1 rA=11100v1w rB=w0v0w01w
T32-1 C_{32,1,27} d=10 A10=1680 type=m4c mu=1 rA=1vw101wv rB=w111111w
T32-1 C_{32,1,28} d=10 A10=1776 type=m4c mu=1 rA=01110wvw rB=w11wv01w
T32-1 C_{32,1,29} d=10 A10=1776 type=m4c mu=1 rA=1v100v11 rB=w0w0101w
T32-1 C_{32,1,30} d=10 A10=1776 type=m4c mu=1 rA=1v0v0v11 rB=1w1ww0v1
T32-1 C_{32,1,31} d=10 A10=1776 type=m4c mu=1 rA=011001vw rB=ww10v01w
T32-1 C_{32,1,32} d=10 A10=1776 type=m4c mu=1 rA=01000vw0 rB=vwww001w
T32-1 C_{32,1,33} d=10 A10=1776 type=m4c mu=1 rA=010001vv rB=v11v101w
T32-1 C_{32,1,34} d=10 A10=1776 type=m4c mu=1 rA=01000vvw rB=wwvww01w
T32-1 C_{32,1,35} d=10 A10=1776 type=m4c mu=1 rA=11000vw1 rB=v1vw1w1w
T32-1 C_{32,1,36} d=10 A10=1776 type=m4c mu=1 rA=11100ww1 rB=v1wvv01w
T32-1 C_{32,1,37} d=10 A10=1776 type=m4c mu=1 rA=1vv001w0 rB=1ww11vv1
T32-1 C_{32,1,38} d=10 A10=1776 type=m4c mu=1 rA=1vv001w0 rB=wv01w0v1
T32-1 C_{32,1,39} d=10 A10=1776 type=m4c mu=1 rA=11100111 rB=w0v1001w
T32-1 C_{32,1,40} d=10 A10=1776 type=m4c mu=1 rA=10000vv1 rB=v0wv001w
T32-1 C_{32,1,41} d=10 A10=1776 type=m4c mu=1 rA=10000ww1 rB=v1wvv01w
T32-1 C_{32,1,42} d=10 A10=1776 type=m4c mu=1 rA=1100011w rB=w1w1w11w
T32-1 C_{32,1,43} d=10 A10=1776 type=m4c mu=1 rA=1v000v1v rB=ww1vvvv1
T32-1 C_{32,1,44} d=10 A10=1776 type=m4c mu=1 rA=11100111 rB=v1vw101w
T32-1 C_{32,1,45} d=10 A10=1824 type=m4c mu=1 rA=010v0wvv rB=vw1111v1
T32-1 C_{32,1,46} d=10 A10=1824 type=m4c mu=1 rA=11100111 rB=w1vvw01w
T32-1 C_{32,1,47} d=10 A10=1824 type=m4c mu=1 rA=10v00wvw rB=vw1vwvv1
T32-1 C_{32,1,48} d=10 A10=1824 type=m4c mu=1 rA=1v0001w1 rB=w0wvv0v1
T32-1 C_{32,1,49} d=10 A10=1824 type=m4c mu=1 rA=1100011w rB=w01vv01w
T32-1 C_{32,1,50} d=10 A10=1824 type=m4c mu=1 rA=00000110 rB=w1vvw01w
T32-1 C_{32,1,51} d=10 A10=1920 type=m4c mu=1 rA=10v00vvv rB=ww10v0v1
T32-1 C_{32,1,52} d=10 A10=1920 type=m4c mu=1 rA=11000w10 rB=v101001w
T32-1 C_{32,1,53} d=10 A10=1920 type=m4c mu=1 rA=10000w10 rB=w011101w
T32-1 C_{32,1,54} d=10 A10=1920 type=m4c mu=1 rA=10000v10 rB=vv1w111w
T32-1 C_{32,1,55} d=10 A10=1920 type=m4c mu=1 rA=1vv00w1w rB=1vvwv0v1
T32-1 C_{32,1,56} d=10 A10=1920 type=m4c mu=1 rA=1vv001w0 rB=11v1vvv1
T32-1 C_{32,1,57} d=10 A10=1920 type=m4c mu=1 rA=1vw00vw1 rB=v1ww10wv
T32-1 C_{32,1,58} d=10 A10=1920 type=m4c mu=1 rA=01100ww0 rB=vv11w01w
T32-1 C_{32,1,59} d=10 A10=1968 type=m4c mu=1 rA=10v00vvv rB=vw1vwvv1
T32-2 C_{32,w,1} d=10 A10=1200 type=m4c mu=w rA=01000v1v rB=vvvw011w
T32-2 C_{32,w,2} d=10 A10=1200 type=m4c mu=w rA=01100vvv rB=011vv01w
T32-2 C_{32,w,3} d=10 A10=1200 type=m4c mu=w rA=1ww001w0 rB=v0w10vwv
T32-2 C_{32,w,4} d=10 A10=1344 type=m4c mu=w rA=11000w11 rB=1w0v101w
T32-2 C_{32,w,5} d=10 A10=1344 type=m4c mu=w rA=1vv00ww1 rB=1v11w0v1
T32-2 C_{32,w,6} d=10 A10=1392 type=m4c mu=w rA=01010ww1 rB=wwvw111w
T32-2 C_{32,w,7} d=10 A10=1392 type=m4c mu=w rA=110001v1 rB=v011011w
T32-2 C_{32,w,8} d=10 A10=1392 type=m4c mu=w rA=11010v01 rB=w11w111w
T32-2 C_{32,w,9} d=10 A10=1392 type=m4c mu=w rA=011001v0 rB=wv11w01w
T32-2 C_{32,w,10} d=10 A10=1488 type=m4c mu=w rA=01010ww1 rB=v10w101w
T32-2 C_{32,w,11} d=10 A10=1488 type=m4c mu=w rA=1ww00wvv rB=vw0vvwwv
T32-2 C_{32,w,12} d=10 A10=1488 type=m4c mu=w rA=10100w1w rB=v0www01w
T32-2 C_{32,w,13} d=10 A10=1488 type=m4c mu=w rA=01000v1v rB=1vv1101w
T32-2 C_{32,w,14} d=10 A10=1536 type=m4c mu=w rA=01000vw0 rB=vwww111w
T32-2 C_{32,w,15} d=10 A10=1632 type=m4c mu=w rA=010001vw rB=wvwww01w
T32-2 C_{32,w,16} d=10 A10=1632 type=m4c mu=w rA=01010ww1 rB=w1vw001w
T32-2 C_{32,w,17} d=10 A10=1632 type=m4c mu=w rA=11010w11 rB=1v1w101w
T32-2 C_{32,w,18} d=10 A10=1632 type=m4c mu=w rA=0101011w rB=vwww111w
T32-2 C_{32,w,19} d=10 A10=1632 type=m4c mu=w rA=10000vv1 rB=10w0101w
T32-2 C_{32,w,20} d=10 A10=1632 type=m4c mu=w rA=1w000v1v rB=vw1wwwwv
T32-2 C_{32,w,21} d=10 A10=1680 type=m4c mu=w rA=01000wwv rB=www1011w
T32-2 C_{32,w,22} d=10 A10=1680 type=m4c mu=w rA=010001vw rB=1v1w101w
T32-2 C_{32,w,23} d=10 A10=1680 type=m4c mu=w rA=11000v10 rB=vw1wv01w
T32-2 C_{32,w,24} d=10 A10=1680 type=m4c mu=w rA=00100wv1 rB=v111101w
T32-2 C_{32,w,25} d=10 A10=1680 type=m4c mu=w rA=10100v11 rB=1wvw111w
T32-2 C_{32,w,26} d=10 A10=1680 type=m4c mu=w rA=11100wv1 rB=v0v0v01w
T32-2 C_{32,w,27} d=10 A10=1680 type=m4c mu=w rA=11110vw1 rB=1wv1v11w
T32-2 C_{32,w,28} d=10 A10=1776 type=m4c mu=w rA=1www0vv1 rB=w0vvw0wv
T32-2 C_{32,w,29} d=10 A10=1776 type=m4c mu=w rA=1vv0011w rB=w01010v1
T32-2 C_{32,w,30} d=10 A10=1776 type=m4c mu=w rA=11010w11 rB=wvwww01w
T32-2 C_{32,w,31} d=10 A10=1776 type=m4c mu=w rA=111001w0 rB=1v0v011w
T32-2 C_{32,w,32} d=10 A10=1776 type=m4c mu=w rA=01000110 rB=11vw001w
T32-2 C_{32,w,33} d=10 A10=1776 type=m4c mu=w rA=01000w1w rB=ww01111w
T32-2 C_{32,w,34} d=10 A10=1776 type=m4c mu=w rA=01000v1v rB=wwv1101w
T32-2 C_{32,w,35} d=10 A10=1776 type=m4c mu=w rA=11010vw0 rB=1vww111w
T32-2 C_{32,w,36} d=10 A10=1776 type=m4c mu=w rA=1v100v1w rB=vvvvv01w
T32-2 C_{32,w,37} d=10 A10=1776 type=m4c mu=w rA=0110011w rB=w1v1111w
T32-2 C_{32,w,38} d=10 A10=1776 type=m4c mu=w rA=0110011w rB=w100vw1w
T32-2 C_{32,w,39} d=10 A10=1776 type=m4c mu=w rA=0110011w rB=1wv1001w
T32-2 C_{32,w,40} d=10 A10=1776 type=m4c mu=w rA=10100v0v rB=01ww001w
T32-2 C_{32,w,41} d=10 A10=1776 type=m4c mu=w rA=100001ww rB=w1vw101w
T32-2 C_{32,w,42} d=10 A10=1776 type=m4c mu=w rA=1w000v1v rB=v11vvwwv
T32-2 C_{32,w,43} d=10 A10=1776 type=m4c mu=w rA=11000w11 rB=1w1v111w
T32-2 C_{32,w,44} d=10 A10=1776 type=m4c mu=w rA=11110vw1 rB=1wv1001w
T32-2 C_{32,w,45} d=10 A10=1824 type=m4c mu=w rA=0101011w rB=1w1vww1w
T32-2 C_{32,w,46} d=10 A10=1824 type=m4c mu=w rA=1wv00v1w rB=1v1v0vv1
T32-2 C_{32,w,47} d=10 A10=1824 type=m4c mu=w rA=10100ww1 rB=vw1vw11w
T32-2 C_{32,w,48} d=10 A10=1824 type=m4c mu=w rA=110001v1 rB=v0www01w
T32-2 C_{32,w,49} d=10 A10=1824 type=m4c mu=w rA=1w000v1v rB=10wvw0wv
T32-2 C_{32,w,50} d=10 A10=1824 type=m4c mu=w rA=000001w0 rB=vwvw0wwv
T32-2 C_{32,w,51} d=10 A10=1920 type=m4c mu=w rA=101001wv rB=vvw0v01w
T32-2 C_{32,w,52} d=10 A10=1920 type=m4c mu=w rA=11000v10 rB=1v00101w
T32-2 C_{32,w,53} d=10 A10=1920 type=m4c mu=w rA=10000w10 rB=v0wv101w
T32-2 C_{32,w,54} d=10 A10=1920 type=m4c mu=w rA=10000w10 rB=vw11111w
T32-2 C_{32,w,55} d=10 A10=1920 type=m4c mu=w rA=1vv00wvv rB=wvw01vv1
T32-2 C_{32,w,56} d=10 A10=1920 type=m4c mu=w rA=0110011w rB=ww11v11w
T32-2 C_{32,w,57} d=10 A10=1920 type=m4c mu=w rA=11100www rB=w1w1011w
T32-2 C_{32,w,58} d=10 A10=1920 type=m4c mu=w rA=011001v0 rB=w1w1011w
T32-2 C_{32,w,59} d=10 A10=1968 type=m4c mu=w rA=101001wv rB=vw1vw11w
T32-3 C_{32,v,1} d=10 A10=1200 type=m4c mu=v rA=01000w1w rB=111vv01w
T32-3 C_{32,v,2} d=10 A10=1200 type=m4c mu=v rA=01100www rB=10vw011w
T32-3 C_{32,v,3} d=10 A10=1200 type=m4c mu=v rA=01100www rB=wwv1001w
T32-3 C_{32,v,4} d=10 A10=1344 type=m4c mu=v rA=1ww00wvv rB=0vv010wv
T32-3 C_{32,v,5} d=10 A10=1344 type=m4c mu=v rA=1ww00vv1 rB=vww10vwv
T32-3 C_{32,v,6} d=10 A10=1392 type=m4c mu=v rA=01010vv1 rB=w11w111w
T32-3 C_{32,v,7} d=10 A10=1392 type=m4c mu=v rA=11000wvv rB=v10v101w
T32-3 C_{32,v,8} d=10 A10=1392 type=m4c mu=v rA=11010w01 rB=vv1w111w
T32-3 C_{32,v,9} d=10 A10=1392 type=m4c mu=v rA=011001w0 rB=vww10w1w
T32-3 C_{32,v,10} d=10 A10=1488 type=m4c mu=v rA=11100wvw rB=w0v0101w
T32-3 C_{32,v,11} d=10 A10=1488 type=m4c mu=v rA=1vv00vww rB=1vv110v1
T32-3 C_{32,v,12} d=10 A10=1488 type=m4c mu=v rA=10v0011v rB=10wvw0v1
T32-3 C_{32,v,13} d=10 A10=1488 type=m4c mu=v rA=010001vv rB=v11vw01w
T32-3 C_{32,v,14} d=10 A10=1536 type=m4c mu=v rA=01000wv0 rB=11ww111w
T32-3 C_{32,v,15} d=10 A10=1632 type=m4c mu=v rA=01000www rB=ww11v01w
T32-3 C_{32,v,16} d=10 A10=1632 type=m4c mu=v rA=11100vww rB=10w0101w
T32-3 C_{32,v,17} d=10 A10=1632 type=m4c mu=v rA=11010v11 rB=vwvw101w
T32-3 C_{32,v,18} d=10 A10=1632 type=m4c mu=v rA=01010vww rB=11ww111w
T32-3 C_{32,v,19} d=10 A10=1632 type=m4c mu=v rA=1010010v rB=1010w01w
T32-3 C_{32,v,20} d=10 A10=1632 type=m4c mu=v rA=1v000w11 rB=1w1111v1
T32-3 C_{32,v,21} d=10 A10=1680 type=m4c mu=v rA=01000vvw rB=11w1101w
T32-3 C_{32,v,22} d=10 A10=1680 type=m4c mu=v rA=010001wv rB=vwvw101w
T32-3 C_{32,v,23} d=10 A10=1680 type=m4c mu=v rA=11000w10 rB=1w11101w
T32-3 C_{32,v,24} d=10 A10=1680 type=m4c mu=v rA=0010011w rB=w11v101w
T32-3 C_{32,v,25} d=10 A10=1680 type=m4c mu=v rA=10100w11 rB=w1vw111w
T32-3 C_{32,v,26} d=10 A10=1680 type=m4c mu=v rA=1vw00v1w rB=1010v0wv
T32-3 C_{32,v,27} d=10 A10=1680 type=m4c mu=v rA=11110wv1 rB=vw1vww1w
T32-3 C_{32,v,28} d=10 A10=1776 type=m4c mu=v rA=111101vv rB=10v1101w
T32-3 C_{32,v,29} d=10 A10=1776 type=m4c mu=v rA=1v100wvv rB=v010v01w
T32-3 C_{32,v,30} d=10 A10=1776 type=m4c mu=v rA=11010v11 rB=ww11v01w
T32-3 C_{32,v,31} d=10 A10=1776 type=m4c mu=v rA=01100vwv rB=www0w01w
T32-3 C_{32,v,32} d=10 A10=1776 type=m4c mu=v rA=01000110 rB=ww1v001w
T32-3 C_{32,v,33} d=10 A10=1776 type=m4c mu=v rA=01000vvw rB=1v1wv01w
T32-3 C_{32,v,34} d=10 A10=1776 type=m4c mu=v rA=010001vv rB=vwvvw01w
T32-3 C_{32,v,35} d=10 A10=1776 type=m4c mu=v rA=110001vw rB=1wv1111w
T32-3 C_{32,v,36} d=10 A10=1776 type=m4c mu=v rA=11v00w1v rB=1wv1v0v1
T32-3 C_{32,v,37} d=10 A10=1776 type=m4c mu=v rA=01100w1w rB=vvww1w1w
T32-3 C_{32,v,38} d=10 A10=1776 type=m4c mu=v rA=0110011v rB=w1wv001w
T32-3 C_{32,v,39} d=10 A10=1776 type=m4c mu=v rA=1vw00w1v rB=101w00wv
T32-3 C_{32,v,40} d=10 A10=1776 type=m4c mu=v rA=10000vwv rB=w01w001w
T32-3 C_{32,v,41} d=10 A10=1776 type=m4c mu=v rA=100001vv rB=wv1w101w
T32-3 C_{32,v,42} d=10 A10=1776 type=m4c mu=v rA=1v000w11 rB=v11v1vv1
T32-3 C_{32,v,43} d=10 A10=1776 type=m4c mu=v rA=11000v11 rB=w1vwww1w
T32-3 C_{32,v,44} d=10 A10=1776 type=m4c mu=v rA=1vw00w1v rB=v11110wv
T32-3 C_{32,v,45} d=10 A10=1824 type=m4c mu=v rA=01010vww rB=wvw1v11w
T32-3 C_{32,v,46} d=10 A10=1824 type=m4c mu=v rA=1vw00w1v rB=1wvww0wv
T32-3 C_{32,v,47} d=10 A10=1824 type=m4c mu=v rA=10100vv1 rB=wv1ww11w
T32-3 C_{32,v,48} d=10 A10=1824 type=m4c mu=v rA=11000wvv rB=w0v1v01w
T32-3 C_{32,v,49} d=10 A10=1824 type=m4c mu=v rA=1v000w11 rB=w011v0v1
T32-3 C_{32,v,50} d=10 A10=1824 type=m4c mu=v rA=000001v0 rB=wv1vv0v1
T32-3 C_{32,v,51} d=10 A10=1920 type=m4c mu=v rA=101001vw rB=vvv0101w
T32-3 C_{32,v,52} d=10 A10=1920 type=m4c mu=v rA=11000w10 rB=wv01001w
T32-3 C_{32,v,53} d=10 A10=1920 type=m4c mu=v rA=10000v10 rB=v011w01w
T32-3 C_{32,v,54} d=10 A10=1920 type=m4c mu=v rA=10000v10 rB=ww11111w
T32-3 C_{32,v,55} d=10 A10=1920 type=m4c mu=v rA=1ww00vww rB=11vv10wv
T32-3 C_{32,v,56} d=10 A10=1920 type=m4c mu=v rA=0110011v rB=1w11v11w
T32-3 C_{32,v,57} d=10 A10=1920 type=m4c mu=v rA=11100vvv rB=v1w1101w
T32-3 C_{32,v,58} d=10 A10=1920 type=m4c mu=v rA=011001w0 rB=v1w1101w
T32-3 C_{32,v,59} d=10 A10=1968 type=m4c mu=v rA=101001vw rB=wv1ww11w
T9 C_{48,1} d=14 type=m4c mu=1 rA=1101ww0vv110 rB=v1v1v1vvvv1v
T9 C_{48,w} d=14 type=m4c mu=w rA=01v1vwv1vvv0 rB=w0v01wv01vvw
T9 C_{48,v} d=14 type=m4c mu=v rA=0011vww00vv1 rB=0v1vvvv0w01v
T9 C_{52,1} d=14 type=m4c mu=1 rA=10vv1v11w0ww1 rB=wv01v1w01w101
T9 C_{52,w} d=14 type=m4c mu=w rA=101v01100w101 rB=vv010v1w11v1v
T9 C_{52,v} d=14 type=m4c mu=v rA=10vv1v11w0ww1 rB=v00w01101w101
T9 C_{56,1} d=16 A16=48825 A18=2275560 type=m4c mu=1 rA=0100wwwv10vwwv rB=1100vvwvw0w111
T9 C_{56,w} d=16 A16=47544 A18=2282700 type=m4c mu=w rA=1wv01vw1w0vvwv rB=00vw10v00vwvwv
T9 C_{56,v} d=14 type=m4c mu=v rA=1ww00w1010100w rB=w01ww0000wvw1w
T9 C_{60,1} d=16 type=m4c mu=1 rA=10w1wv0111v011v rB=v0w10wvwv00vvvv
T9 C_{60,w} d=16 type=m4c mu=w rA=1v1000vw0wv1vww rB=v0w01ww0v11wv11
T9 C_{60,v} d=16 type=m4c mu=v rA=1v1000vw0wv1vww rB=vw100w00w01wv11
T9 C_{64,1} d=16 type=m4c mu=1 rA=1vvvv01111wvwwww rB=1w0vw111vvvw01ww
T9 C_{64,w} d=16 type=m4c mu=w rA=1w0111wvwv0101v0 rB=011110vvv11v01v1
T9 C_{64,v} d=16 type=m4c mu=v rA=1w0111wvwv0101v0 rB=011110vv10v1wwwv
T9 C_{68,1} d=18 type=m4c mu=1 rA=10vwwv1v0v01110wv rB=w101v1vvvww0vwv0v
T9 C_{68,w} d=18 type=m4c mu=w rA=1vwwv01vvvw0vwv00 rB=v101wvvw10w010ww0
T9 C_{68,v} d=18 type=m4c mu=v rA=01w0w0ww1vwwwwv1v rB=01wvw0011v1v1vw0w
T9 C_{72,1} d=18 type=m4c mu=1 rA=1v0w0wv000wv0v0wvw rB=vw010w1010w1110011
T9 C_{72,w} d=18 type=m4c mu=w rA=10wvw00ww0v1111w1v rB=vv1v11vwv0w01w1110
T9 C_{72,v} d=18 type=m4c mu=v rA=011w01www1v1v1w0w0 rB=1vvvv0w000w01vv010
T9 C_{76,1} d=18 type=m4c mu=1 rA=01v1v00w11vwwv1w0vv rB=0w100v1v1001w0v0v00
T9 C_{76,w} d=18 type=m4c mu=w rA=01vw01w1vv001v0w1vv rB=v1110w1vv1v01110vw0
T9 C_{76,v} d=18 type=m4c mu=v rA=01wvv10011010w11vw1 rB=1v111001ww0w1vv0100
T9 C_{80,1} d=20 type=m4c mu=1 rA=1v0wvvv1w0w110v11ww0 rB=1100v11wv000v1wvv11w
T9 C_{80,w} d=20 type=m4c mu=w rA=10v0w01vw1wvvvwvvw00 rB=00w010vvwvvw0v0vwvv1
T9 C_{80,v} d=20 type=m4c mu=v rA=01vwv1vv01w0w011wv1w rB=11vvwv0011vw0v1010ww
T9 C_{84,w} d=20 type=m4c mu=w rA=1wvv001v11wwv010w11w1 rB=w0000wv00111w00v00000
T9 C_{88,w} d=20 type=m4c mu=w rA=00100vvwvv0w11vwv1vvv0 rB=000vwvvwv01vww0v000000
T9 C_{96,w} d=22 type=m4c mu=w rA=111v1v10000010wv10vw0vw1 rB=10vwv01v010wv1w1w01v111w
G G_{91,1} k=45 type=cyclic n=91 g=11vw1w1vv0v0vvvwv0111100ww11v0w10w1101wvwvv1w01
G G_{91,2} k=46 type=cyclic n=91 g=10v10wv0vv00v0v1wwvwvwww0wvw11vww01001v0w1wv11
G G_{100} k=50 type=dcirc row=ww1vw11wv010v1wvv1vv01vv0w0011www1wv1111w1v1www0v1
W56 i=0 c=1 alpha=0 beta=0
W56 i=16 c=0 alpha=1 beta=0
W56 i=18 c=0 alpha=0 beta=1
W56 i=20 c=113963850 alpha=-78 beta=-15
W56 i=22 c=1616214600 alpha=520 beta=99
W56 i=24 c=35022262275 alpha=-1495 beta=-357
W56 i=26 c=467452738368 alpha=1344 beta=612
W56 i=28 c=4854958425240 alpha=5560 beta=612
W56 i=30 c=37999586848608 alpha=-28576 beta=-7140
W56 i=32 c=223928221341825 alpha=79170 beta=23868
W56 i=34 c=991894905892800 alpha=-170560 beta=-51714
W56 i=36 c=3272633909885340 alpha=309452 beta=82654
W56 i=38 c=7961209635178800 alpha=-471120 beta=-102102
W56 i=40 c=14053893738878070 alpha=586586 beta=99450
W56 i=42 c=17629097730552000 alpha=-584000 beta=-76908
W56 i=44 c=15262097167863000 alpha=457080 beta=47124
W56 i=46 c=8759255147042400 alpha=-276640 beta=-22644
W56 i=48 c=3144896807802750 alpha=126685 beta=8364
W56 i=50 c=646962821144640 alpha=-42432 beta=-2295
W56 i=52 c=65864956983210 alpha=9810 beta=441
W56 i=54 c=2485731965640 alpha=-1400 beta=-53
W56 i=56 c=14512944519 alpha=93 beta=3
DK n=24 d=8
DK n=28 d=10
DK n=32 d=10
DK n=36 d=12
DK n=40 d=12
DK n=44 d=12
DK n=48 d=14
DK n=52 d=14
DK n=56 d=14
DK n=60 d=16
DK n=64 d=16
DK n=68 d=18
DK n=72 d=18
DK n=76 d=18
DK n=80 d=20
DN n=24 lo=8 hi=8
DN n=28 lo=10 hi=10
DN n=32 lo=10 hi=12
DN n=36 lo=12 hi=14
DN n=40 lo=12 hi=14
DN n=44 lo=12 hi=16
DN n=48 lo=14 hi=18
DN n=52 lo=14 hi=18
DN n=56 lo=16 hi=20
DN n=60 lo=16 hi=22
DN n=64 lo=16 hi=22
DN n=68 lo=18 hi=24
DN n=72 lo=18 hi=26
DN n=76 lo=18 hi=26
DN n=80 lo=20 hi=28
DN n=84 lo=20 hi=30
DN n=88 lo=20 hi=30
DN n=92 lo=22 hi=32
DN n=96 lo=22 hi=34
DN n=100 lo=22 hi=34
DMU n=24 mu=1 lo=8 hi=8
DMU n=24 mu=w lo=8 hi=8
DMU n=24 mu=v lo=8 hi=8
DMU n=28 mu=1 lo=10 hi=10
DMU n=28 mu=w lo=10 hi=10
DMU n=28 mu=v lo=10 hi=10
DMU n=32 mu=1 lo=10 hi=10
DMU n=32 mu=w lo=10 hi=10
DMU n=32 mu=v lo=10 hi=10
DMU n=36 mu=1 lo=12 hi=12
DMU n=36 mu=w lo=12 hi=12
DMU n=36 mu=v lo=12 hi=12
DMU n=40 mu=1 lo=12 hi=12
DMU n=40 mu=w lo=12 hi=12
DMU n=40 mu=v lo=12 hi=12
DMU n=44 mu=1 lo=12 hi=12
DMU n=44 mu=w lo=12 hi=12
DMU n=44 mu=v lo=12 hi=12
DMU n=48 mu=1 lo=14 hi=18
DMU n=48 mu=w lo=14 hi=18
DMU n=48 mu=v lo=14 hi=18
DMU n=52 mu=1 lo=14 hi=18
DMU n=52 mu=w lo=14 hi=18
DMU n=52 mu=v lo=14 hi=18
DMU n=56 mu=1 lo=16 hi=20
DMU n=56 mu=w lo=16 hi=20
DMU n=56 mu=v lo=14 hi=20
DMU n=60 mu=1 lo=16 hi=22
DMU n=60 mu=w lo=16 hi=22
DMU n=60 mu=v lo=16 hi=22
DMU n=64 mu=1 lo=16 hi=22
DMU n=64 mu=w lo=16 hi=22
DMU n=64 mu=v lo=16 hi=22
DMU n=68 mu=1 lo=18 hi=24
DMU n=68 mu=w lo=18 hi=24
DMU n=68 mu=v lo=18 hi=24
DMU n=72 mu=1 lo=18 hi=26
DMU n=72 mu=w lo=18 hi=26
DMU n=72 mu=v lo=18 hi=26
DMU n=76 mu=1 lo=18 hi=26
DMU n=76 mu=w lo=18 hi=26
DMU n=76 mu=v lo=18 hi=26
DMU n=80 mu=1 lo=20 hi=28
DMU n=80 mu=w lo=20 hi=28
DMU n=80 mu=v lo=20 hi=28
D4 n=56 k=28 lo=16 hi=21
DMAX n=56 k=0 lo=16 hi=20
)QSD";
    return kData;
}

/// 64-bit FNV-1a of the dataset text.
inline std::uint64_t known_dataset_checksum() {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : known_dataset()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct KnownCodeEntry {
    std::string table;
    std::string name;
    std::map<std::string, long long> claims;
    std::string record_text;

    ConstructionRecord record() const { return parse_construction(record_text); }

    long long claim(const std::string& key) const {
        auto it = claims.find(key);
        if (it == claims.end()) throw std::out_of_range("no claim '" + key + "' for " + name);
        return it->second;
    }
    bool has_claim(const std::string& key) const { return claims.count(key) != 0; }
};

struct IntRange {
    int lo = 0, hi = 0;
};

struct KnownBounds {
    std::map<int, int> dk;
    std::map<int, IntRange> d_range;
    std::map<std::pair<int, char>, IntRange> d_mu_range;
    IntRange d4_56_28;
    IntRange dmax_56_0;
};

struct PublishedEnumeratorRow {
    int weight = 0;
    std::string constant;
    long long alpha = 0, beta = 0;
};

namespace detail {

inline std::vector<std::string> dataset_lines(std::string_view kind) {
    std::vector<std::string> out;
    std::istringstream in{std::string(known_dataset())};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::string head = line.substr(0, line.find(' '));
        if (head == kind) out.push_back(line);
    }
    return out;
}

inline std::map<std::string, std::string> key_values(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

}  // namespace detail

inline const std::vector<std::string>& known_table_ids() {
    static const std::vector<std::string> ids{"T2", "T3", "T4", "T5", "T32-1", "T32-2", "T32-3", "T9", "G"};
    return ids;
}

/// All code entries of one table, in published order.
inline std::vector<KnownCodeEntry> known_codes(std::string_view table) {
    std::vector<KnownCodeEntry> out;
    for (const auto& line : detail::dataset_lines(table)) {
        KnownCodeEntry e;
        std::istringstream in(line);
        in >> e.table >> e.name;
        const auto type = line.find("type=");
        if (type == std::string::npos) throw std::logic_error("dataset: entry without construction: " + line);
        e.record_text = line.substr(type);
        std::istringstream claims(line.substr(0, type));
        std::string tok;
        claims >> tok >> tok;
        while (claims >> tok) {
            const auto eq = tok.find('=');
            e.claims[tok.substr(0, eq)] = std::stoll(tok.substr(eq + 1));
        }
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<KnownCodeEntry> known_codes() {
    std::vector<KnownCodeEntry> out;
    for (const auto& t : known_table_ids()) {
        auto v = known_codes(t);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

inline KnownCodeEntry known_code(std::string_view name) {
    for (auto& e : known_codes())
        if (e.name == name) return e;
    throw std::out_of_range("unknown code " + std::string(name));
}

inline KnownBounds known_bounds() {
    KnownBounds b;
    for (const auto& l : detail::dataset_lines("DK")) {
        auto kv = detail::key_values(l);
        b.dk[std::stoi(kv.at("n"))] = std::stoi(kv.at("d"));
    }
    for (const auto& l : detail::dataset_lines("DN")) {
        auto kv = detail::key_values(l);
        b.d_range[std::stoi(kv.at("n"))] = {std::stoi(kv.at("lo")), std::stoi(kv.at("hi"))};
    }
    for (const auto& l : detail::dataset_lines("DMU")) {
        auto kv = detail::key_values(l);
        b.d_mu_range[{std::stoi(kv.at("n")), kv.at("mu").at(0)}] = {std::stoi(kv.at("lo")), std::stoi(kv.at("hi"))};
    }
    auto single = [](const char* kind) {
        auto kv = detail::key_values(detail::dataset_lines(kind).at(0));
        return IntRange{std::stoi(kv.at("lo")), std::stoi(kv.at("hi"))};
    };
    b.d4_56_28 = single("D4");
    b.dmax_56_0 = single("DMAX");
    return b;
}

inline std::vector<PublishedEnumeratorRow> published_w56() {
    std::vector<PublishedEnumeratorRow> out;
    for (const auto& l : detail::dataset_lines("W56")) {
        auto kv = detail::key_values(l);
        out.push_back({std::stoi(kv.at("i")), kv.at("c"), std::stoll(kv.at("alpha")), std::stoll(kv.at("beta"))});
    }
    return out;
}

}  // namespace qsd

#endif  // QSD_KNOWN_CODES_HPP
