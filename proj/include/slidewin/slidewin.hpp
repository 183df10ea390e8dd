#ifndef SLIDEWIN_SLIDEWIN_HPP
#define SLIDEWIN_SLIDEWIN_HPP

#include "algebra.hpp"
#include "opcount.hpp"
#include "sequential.hpp"
#include "exponentiation.hpp"
#include "vector_window.hpp"
#include "gallery.hpp"
#include "registry.hpp"

#endif
