#include "implycim/oracle.hpp"

#include <array>

#include "implycim/errors.hpp"

namespace implycim {

bits trivium_ref(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv, std::uint64_t n) {
  if (key.size() != 80) throw input_error("trivium key must be 80 bits");
  if (iv.size() != 80) throw input_error("trivium iv must be 80 bits");

  std::array<std::uint8_t, 289> s{};  // s[1..288]
  for (int i = 0; i < 80; ++i) {
    s[1 + i] = key[i] & 1;
    s[94 + i] = iv[i] & 1;
  }
  s[286] = s[287] = s[288] = 1;

  bits out;
  out.reserve(n);
  for (std::uint64_t t = 0; t < 1152 + n; ++t) {
    std::uint8_t t1 = s[66] ^ s[93];
    std::uint8_t t2 = s[162] ^ s[177];
    std::uint8_t t3 = s[243] ^ s[288];
    if (t >= 1152) out.push_back(t1 ^ t2 ^ t3);
    t1 ^= (s[91] & s[92]) ^ s[171];
    t2 ^= (s[175] & s[176]) ^ s[264];
    t3 ^= (s[286] & s[287]) ^ s[69];
    for (int i = 288; i > 1; --i) s[i] = s[i - 1];
    s[1] = t3;
    s[94] = t1;
    s[178] = t2;
  }
  return out;
}

bits grain128a_ref(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv, std::uint64_t n) {
  if (key.size() != 128) throw input_error("grain128a key must be 128 bits");
  if (iv.size() != 96) throw input_error("grain128a iv must be 96 bits");

  std::array<std::uint8_t, 128> b{}, s{};
  for (int i = 0; i < 128; ++i) b[i] = key[i] & 1;
  for (int i = 0; i < 96; ++i) s[i] = iv[i] & 1;
  for (int i = 96; i < 127; ++i) s[i] = 1;
  s[127] = 0;

  bits out;
  out.reserve(n);
  for (std::uint64_t t = 0; t < 256 + n; ++t) {
    const std::uint8_t h = (b[12] & s[8]) ^ (s[13] & s[20]) ^ (b[95] & s[42]) ^ (s[60] & s[79]) ^
                           (b[12] & b[95] & s[94]);
    const std::uint8_t y = h ^ s[93] ^ b[2] ^ b[15] ^ b[36] ^ b[45] ^ b[64] ^ b[73] ^ b[89];
    std::uint8_t f = s[0] ^ s[7] ^ s[38] ^ s[70] ^ s[81] ^ s[96];
    std::uint8_t g = s[0] ^ b[0] ^ b[26] ^ b[56] ^ b[91] ^ b[96] ^ (b[3] & b[67]) ^ (b[11] & b[13]) ^
                     (b[17] & b[18]) ^ (b[27] & b[59]) ^ (b[40] & b[48]) ^ (b[61] & b[65]) ^ (b[68] & b[84]) ^
                     (b[22] & b[24] & b[25]) ^ (b[70] & b[78] & b[82]) ^ (b[88] & b[92] & b[93] & b[95]);
    if (t < 256) {
      f ^= y;
      g ^= y;
    } else {
      out.push_back(y);
    }
    for (int i = 0; i < 127; ++i) {
      s[i] = s[i + 1];
      b[i] = b[i + 1];
    }
    s[127] = f;
    b[127] = g;
  }
  return out;
}

bits xorcrypt(std::span<const std::uint8_t> message, std::span<const std::uint8_t> keystream) {
  if (message.size() != keystream.size()) throw input_error("message and keystream lengths differ");
  bits out(message.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (message[i] ^ keystream[i]) & 1;
  return out;
}

}  // namespace implycim
