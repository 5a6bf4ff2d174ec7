#pragma once

#include "termweight/corpus.hpp"
#include "termweight/distribution.hpp"
#include "termweight/error.hpp"
#include "termweight/evaluation.hpp"
#include "termweight/experiment.hpp"
#include "termweight/global_weighting.hpp"
#include "termweight/io.hpp"
#include "termweight/linear_classifier.hpp"
#include "termweight/local_weighting.hpp"
#include "termweight/tokenizer.hpp"
#include "termweight/vectorizer.hpp"
