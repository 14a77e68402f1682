#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minordeck
{

/*! \brief Base class of all errors raised by the library. */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class table_size_error : public error
{
public:
  using error::error;
};

class value_range_error : public error
{
public:
  using error::error;
};

class arity_error : public error
{
public:
  using error::error;
};

class index_error : public error
{
public:
  using error::error;
};

class composition_error : public error
{
public:
  using error::error;
};

class map_range_error : public error
{
public:
  using error::error;
};

class range_error : public error
{
public:
  using error::error;
};

class kind_error : public error
{
public:
  using error::error;
};

/* shapes of two operands (domain, codomain, arity) do not match */
class domain_error : public error
{
public:
  using error::error;
};

class budget_error : public error
{
public:
  using error::error;
};

/*! \brief Malformed textual input; `position()` is the 0-based offending character. */
class parse_error : public error
{
public:
  parse_error( const std::string& what, std::size_t position )
      : error( what + " (at position " + std::to_string( position ) + ")" ), position_( position )
  {
  }

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace minordeck
