#include "mutau/fields.hpp"

#include <cstdlib>

namespace mutau {

std::string FieldDescriptor::str() const {
    switch (tag) {
        case FieldTag::Q: return "Q";
        case FieldTag::Fp: return "F:" + std::to_string(p);
        case FieldTag::Qt: return "Qt";
        case FieldTag::Fpt: return "Ft:" + std::to_string(p);
    }
    return "?";
}

static std::uint64_t parse_modulus(const std::string& text, std::size_t start) {
    if (start >= text.size()) throw InputError("missing prime in field descriptor '" + text + "'");
    char* end = nullptr;
    unsigned long long v = std::strtoull(text.c_str() + start, &end, 10);
    if (end != text.c_str() + text.size() || v == 0)
        throw InputError("bad prime in field descriptor '" + text + "'");
    validate_prime_modulus(v);
    return v;
}

FieldDescriptor parse_field_descriptor(const std::string& text) {
    if (text == "Q") return {FieldTag::Q, 0};
    if (text == "Qt") return {FieldTag::Qt, 0};
    if (text.rfind("F:", 0) == 0) return {FieldTag::Fp, parse_modulus(text, 2)};
    if (text.rfind("Ft:", 0) == 0) return {FieldTag::Fpt, parse_modulus(text, 3)};
    throw InputError("unknown field descriptor '" + text + "' (expected Q, F:<p>, Qt, Ft:<p>)");
}

}  // namespace mutau
