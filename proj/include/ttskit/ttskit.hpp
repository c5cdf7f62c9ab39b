// ttskit/ttskit.hpp
//
// Umbrella header for the whole library.

// Copyright 2026  ttskit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TTSKIT_TTSKIT_HPP_
#define TTSKIT_TTSKIT_HPP_

#include "ttskit/acoustic_model.hpp"
#include "ttskit/arpa.hpp"
#include "ttskit/cluster_tree.hpp"
#include "ttskit/common.hpp"
#include "ttskit/config.hpp"
#include "ttskit/context_stats.hpp"
#include "ttskit/duration_model.hpp"
#include "ttskit/eval_align.hpp"
#include "ttskit/eval_ratings.hpp"
#include "ttskit/g2p.hpp"
#include "ttskit/labels.hpp"
#include "ttskit/manifest.hpp"
#include "ttskit/ngram_model.hpp"
#include "ttskit/parallel.hpp"
#include "ttskit/phoneset.hpp"
#include "ttskit/pipeline.hpp"
#include "ttskit/questions.hpp"
#include "ttskit/significance.hpp"
#include "ttskit/splitter.hpp"
#include "ttskit/textnorm.hpp"

#endif  // TTSKIT_TTSKIT_HPP_
