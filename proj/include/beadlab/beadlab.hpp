#ifndef BEADLAB_BEADLAB_HPP
#define BEADLAB_BEADLAB_HPP

#include "beadlab/action.hpp"
#include "beadlab/arrangement.hpp"
#include "beadlab/catmodel.hpp"
#include "beadlab/collision.hpp"
#include "beadlab/counting.hpp"
#include "beadlab/errors.hpp"
#include "beadlab/io.hpp"
#include "beadlab/plane_tree.hpp"
#include "beadlab/render.hpp"
#include "beadlab/ring.hpp"
#include "beadlab/verify.hpp"

#endif  // BEADLAB_BEADLAB_HPP
