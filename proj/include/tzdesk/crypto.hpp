#pragma once

#include <openssl/sha.h>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "tzdesk/error.hpp"
#include "tzdesk/util.hpp"

namespace tzdesk::crypto {

using Digest = std::array<unsigned char, 32>;

inline Digest sha256(std::string_view data)
{
    Digest out;
    SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), out.data());
    return out;
}

inline std::string sha256_bytes(std::string_view data)
{
    auto d = sha256(data);
    return std::string(reinterpret_cast<const char*>(d.data()), d.size());
}

inline std::string sha256_hex(std::string_view data)
{
    auto d = sha256(data);
    return to_hex(d.data(), d.size());
}

// --- base58 (Bitcoin alphabet, no checksum) ---

inline const char* base58_alphabet()
{
    return "123456789ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz";
}

inline std::string base58_encode(std::string_view bytes)
{
    const char* alpha = base58_alphabet();
    size_t zeros = 0;
    while (zeros < bytes.size() && bytes[zeros] == 0)
        ++zeros;
    std::vector<unsigned char> digits; // base58, little-endian
    for (size_t i = zeros; i < bytes.size(); ++i) {
        unsigned carry = static_cast<unsigned char>(bytes[i]);
        for (auto& d : digits) {
            carry += static_cast<unsigned>(d) << 8;
            d = static_cast<unsigned char>(carry % 58);
            carry /= 58;
        }
        while (carry) {
            digits.push_back(static_cast<unsigned char>(carry % 58));
            carry /= 58;
        }
    }
    std::string out(zeros, '1');
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        out.push_back(alpha[*it]);
    return out;
}

inline std::string base58_decode(std::string_view text, size_t expect_len)
{
    int map[128];
    for (auto& m : map)
        m = -1;
    const char* alpha = base58_alphabet();
    for (int i = 0; i < 58; ++i)
        map[static_cast<unsigned char>(alpha[i])] = i;

    size_t zeros = 0;
    while (zeros < text.size() && text[zeros] == '1')
        ++zeros;
    std::vector<unsigned char> bytes; // little-endian
    for (size_t i = zeros; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c >= 128 || map[c] < 0)
            fail(ErrorKind::DecodeError, "invalid base58 character in '" + std::string(text) + "'");
        unsigned carry = static_cast<unsigned>(map[c]);
        for (auto& b : bytes) {
            carry += static_cast<unsigned>(b) * 58;
            b = static_cast<unsigned char>(carry & 0xff);
            carry >>= 8;
        }
        while (carry) {
            bytes.push_back(static_cast<unsigned char>(carry & 0xff));
            carry >>= 8;
        }
    }
    std::string out(zeros, '\0');
    for (auto it = bytes.rbegin(); it != bytes.rend(); ++it)
        out.push_back(static_cast<char>(*it));
    if (out.size() != expect_len)
        fail(ErrorKind::DecodeError, "base58 payload has wrong length: '" + std::string(text) + "'");
    return out;
}

// --- addresses ---
//
// tz1<base58 of 20 bytes> for implicit accounts, KT1<base58 of 20 bytes> for
// originated contracts. The 20 raw bytes are what the binary operation
// encoding carries (1 tag byte + 20 hash bytes).

inline std::string tz1_address(std::string_view hash20)
{
    return "tz1" + base58_encode(hash20);
}

inline std::string kt1_address(std::string_view hash20)
{
    return "KT1" + base58_encode(hash20);
}

inline bool is_tz1(std::string_view addr)
{
    return addr.size() > 3 && addr.substr(0, 3) == "tz1";
}

inline bool is_kt1(std::string_view addr)
{
    return addr.size() > 3 && addr.substr(0, 3) == "KT1";
}

// tag byte (0 = tz1, 1 = KT1) + 20 hash bytes
inline std::string address_to_binary(std::string_view addr)
{
    if (is_tz1(addr))
        return std::string(1, '\x00') + base58_decode(addr.substr(3), 20);
    if (is_kt1(addr))
        return std::string(1, '\x01') + base58_decode(addr.substr(3), 20);
    fail(ErrorKind::DecodeError, "not an address: '" + std::string(addr) + "'");
}

inline std::string address_from_binary(std::string_view bin21)
{
    if (bin21.size() != 21)
        fail(ErrorKind::DecodeError, "address binary must be 21 bytes");
    std::string_view h = bin21.substr(1);
    switch (bin21[0]) {
        case 0: return tz1_address(h);
        case 1: return kt1_address(h);
    }
    fail(ErrorKind::DecodeError, "unknown address tag byte");
}

inline bool is_address(std::string_view addr)
{
    if (!is_tz1(addr) && !is_kt1(addr))
        return false;
    try {
        address_to_binary(addr);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// --- signing scheme ---
//
// Deterministic keyed-hash stand-in: sig = H(key || message). The public and
// secret key carry the same 32 bytes, so holders of a revealed public key can
// verify (and, being a simulation, also sign). Everything goes through this
// interface so a real asymmetric scheme can replace it wholesale.

struct KeyPair {
    std::string public_key; // "pk:<hex64>"
    std::string secret_key; // "sk:<hex64>"
    std::string pkh;        // "tz1..."
};

inline std::string key_bytes(std::string_view key_text)
{
    auto colon = key_text.find(':');
    if (colon == std::string_view::npos)
        fail(ErrorKind::DecodeError, "malformed key: '" + std::string(key_text) + "'");
    std::string bytes = from_hex(key_text.substr(colon + 1));
    if (bytes.size() != 32)
        fail(ErrorKind::DecodeError, "key must be 32 bytes");
    return bytes;
}

inline std::string pkh_of_public_key(std::string_view public_key)
{
    std::string h = sha256_bytes("tzdesk:pkh:" + key_bytes(public_key));
    return tz1_address(std::string_view(h).substr(0, 20));
}

inline KeyPair keypair_from_seed_bytes(std::string_view seed32)
{
    if (seed32.size() != 32)
        fail(ErrorKind::Internal, "key seed must be 32 bytes");
    std::string hex = to_hex(std::string(seed32));
    KeyPair kp;
    kp.public_key = "pk:" + hex;
    kp.secret_key = "sk:" + hex;
    kp.pkh = pkh_of_public_key(kp.public_key);
    return kp;
}

inline KeyPair generate_keypair(std::mt19937_64& rng)
{
    std::string seed(32, '\0');
    for (size_t i = 0; i < 32; i += 8) {
        std::uint64_t w = rng();
        for (size_t j = 0; j < 8; ++j)
            seed[i + j] = static_cast<char>((w >> (8 * j)) & 0xff);
    }
    return keypair_from_seed_bytes(seed);
}

inline std::string sign(std::string_view secret_key, std::string_view message)
{
    return "sig:" + sha256_hex(key_bytes(secret_key) + std::string(message));
}

inline bool verify(std::string_view public_key, std::string_view message, std::string_view signature)
{
    try {
        return signature == "sig:" + sha256_hex(key_bytes(public_key) + std::string(message));
    } catch (const Error&) {
        return false;
    }
}

// --- chain identifiers ---

inline std::string block_id(std::string_view encoding)
{
    return "B:" + sha256_hex(encoding);
}

inline std::string operation_id(std::string_view encoding)
{
    return "o:" + sha256_hex(encoding);
}

inline std::string chain_id_of(std::string_view seed_text)
{
    return "Net:" + sha256_hex("tzdesk:chain:" + std::string(seed_text)).substr(0, 16);
}

inline std::string hash32_of_id(std::string_view id)
{
    auto colon = id.find(':');
    if (colon == std::string_view::npos)
        fail(ErrorKind::DecodeError, "malformed identifier: '" + std::string(id) + "'");
    std::string bytes = from_hex(id.substr(colon + 1));
    if (bytes.size() != 32)
        fail(ErrorKind::DecodeError, "identifier payload must be 32 bytes");
    return bytes;
}

// --- leading-zero-bit proof of work (node identities) ---

inline unsigned leading_zero_bits(const Digest& d)
{
    unsigned bits = 0;
    for (unsigned char byte : d) {
        if (byte == 0) {
            bits += 8;
            continue;
        }
        for (int b = 7; b >= 0; --b) {
            if (byte & (1u << b))
                return bits;
            ++bits;
        }
    }
    return bits;
}

inline bool pow_stamp_valid(std::string_view public_key, std::uint64_t nonce, unsigned difficulty_bits)
{
    auto d = sha256(std::string(public_key) + ":" + std::to_string(nonce));
    return leading_zero_bits(d) >= difficulty_bits;
}

} // namespace tzdesk::crypto
