#pragma once

#include "subelect/antagonism.hpp"
#include "subelect/clones.hpp"
#include "subelect/election.hpp"
#include "subelect/errors.hpp"
#include "subelect/generators.hpp"
#include "subelect/identity.hpp"
#include "subelect/ilp.hpp"
#include "subelect/signature.hpp"
