#pragma once

// boost 1.74's multiprecision/traits/is_byte_container.hpp hard-errors under
// C++20 on types whose const_iterator member is void -- which Eigen 3.4
// matrices have.  The trait feeds a cpp_int constructor overload this project
// never uses, so we pre-empt the buggy header with a SFINAE-safe equivalent
// under the same include guard.  Must be included before any
// boost/multiprecision header (numeric.hpp does).

#ifndef BOOST_IS_BYTE_CONTAINER_HPP
#define BOOST_IS_BYTE_CONTAINER_HPP

#include <iterator>
#include <type_traits>

namespace boost { namespace multiprecision { namespace detail {

template <class C, class = void>
struct is_byte_container : std::false_type {};

template <class C>
struct is_byte_container<
    C, std::void_t<typename std::iterator_traits<typename C::const_iterator>::value_type>>
    : std::integral_constant<
          bool,
          std::is_integral<typename std::remove_cv<typename std::iterator_traits<
              typename C::const_iterator>::value_type>::type>::value &&
              sizeof(typename std::iterator_traits<typename C::const_iterator>::value_type) == 1> {
};

}}}  // namespace boost::multiprecision::detail

#endif  // BOOST_IS_BYTE_CONTAINER_HPP
