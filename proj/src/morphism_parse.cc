#include <cctype>
#include <string>

#include "qsigma/errors.hpp"
#include "qsigma/site.hpp"

namespace qsigma {

namespace {

class Reader
{
public:
  explicit Reader(std::string_view text) : _text(text) {}

  [[noreturn]] void fail(std::string const &why) const
  {
    throw InputError(InputError::Kind::Parse, "cannot parse morphism '" + std::string(_text) +
                                                  "': " + why + " at offset " +
                                                  std::to_string(_pos));
  }

  void skip()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool peek(char c)
  {
    skip();
    return _pos < _text.size() && _text[_pos] == c;
  }

  bool accept(std::string_view s)
  {
    skip();
    if (_text.substr(_pos, s.size()) != s)
      return false;
    _pos += s.size();
    return true;
  }

  void expect(std::string_view s)
  {
    if (!accept(s))
      fail("expected '" + std::string(s) + "'");
  }

  int number()
  {
    skip();
    if (_pos >= _text.size() || !std::isdigit(static_cast<unsigned char>(_text[_pos])))
      fail("expected a number");
    long v = 0;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      v = v * 10 + (_text[_pos++] - '0');
      if (v > 1'000'000)
        fail("number too large");
    }
    return static_cast<int>(v);
  }

  bool done()
  {
    skip();
    return _pos == _text.size();
  }

private:
  std::string_view _text;
  std::size_t _pos = 0;
};

} // namespace

Morphism Morphism::parse(std::string_view text)
{
  Reader r(text);
  r.expect("(");
  std::vector<Entry> entries;
  // symbols are collected raw and validated once the source is known
  if (!r.peek(')')) {
    do {
      if (r.peek('x')) {
        std::vector<int> syms;
        do {
          r.expect("x");
          syms.push_back(r.number());
        } while (r.accept("^"));
        entries.push_back(Entry::conj(std::move(syms)));
      } else {
        int bit = r.number();
        if (bit > 1)
          r.fail("constants must be 0 or 1");
        entries.push_back(Entry::constant(bit));
      }
    } while (r.accept(","));
  }
  r.expect(")");
  r.expect(":");
  int src = r.number();
  r.expect("->");
  int dst = r.number();
  if (!r.done())
    r.fail("trailing characters");
  if (dst != static_cast<int>(entries.size()))
    throw InputError(InputError::Kind::InvalidMorphism,
                     "arity annotation says " + std::to_string(dst) + " entries, found " +
                         std::to_string(entries.size()));
  return Morphism(src, std::move(entries));
}

} // namespace qsigma
