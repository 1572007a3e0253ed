#include "x0star/jsonio.hpp"

#include <stdexcept>
#include <vector>

namespace x0star::jsonio {

namespace {

using json = nlohmann::json;

class ExactSax {
public:
    explicit ExactSax(json& root) : root_(root) {}

    bool null() { return put(json(nullptr)); }
    bool boolean(bool v) { return put(json(v)); }
    bool number_integer(json::number_integer_t v) { return put(json(v)); }
    bool number_unsigned(json::number_unsigned_t v) { return put(json(v)); }
    bool number_float(json::number_float_t v, const json::string_t& text)
    {
        const bool integral = text.find_first_of(".eE") == std::string::npos;
        return integral ? put(json(text)) : put(json(v));
    }
    bool string(json::string_t& v) { return put(json(v)); }
    bool binary(json::binary_t&) { return false; }
    bool start_object(std::size_t) { return open(json::object()); }
    bool key(json::string_t& k)
    {
        key_ = k;
        return true;
    }
    bool end_object() { return close(); }
    bool start_array(std::size_t) { return open(json::array()); }
    bool end_array() { return close(); }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e)
    {
        throw std::runtime_error("JSON parse error at byte " + std::to_string(pos) + ": " + e.what());
    }

private:
    json* slot(json v)
    {
        if (stack_.empty()) {
            root_ = std::move(v);
            return &root_;
        }
        json& top = *stack_.back();
        if (top.is_array()) {
            top.push_back(std::move(v));
            return &top.back();
        }
        top[key_] = std::move(v);
        return &top[key_];
    }
    bool put(json v)
    {
        slot(std::move(v));
        return true;
    }
    bool open(json v)
    {
        stack_.push_back(slot(std::move(v)));
        return true;
    }
    bool close()
    {
        stack_.pop_back();
        return true;
    }

    json& root_;
    std::vector<json*> stack_;
    std::string key_;
};

} // namespace

nlohmann::json parse_exact(const std::string& text)
{
    json root;
    ExactSax sax(root);
    json::sax_parse(text, &sax);
    return root;
}

mpz_class to_mpz(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return mpz_class(std::to_string(v.get<long long>()));
    if (v.is_number_unsigned())
        return mpz_class(std::to_string(v.get<unsigned long long>()));
    if (v.is_string())
        return mpz_class(v.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + v.dump());
}

} // namespace x0star::jsonio
