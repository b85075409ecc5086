// Copyright 2026 The TopicForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "topicforge/porter_stemmer.h"

namespace topicforge {
namespace {

// Works in place on buf_[0..end_], end_ inclusive. stem_end_ is the end of
// the candidate stem after a successful ends() match.
class PorterStemmer {
 public:
  explicit PorterStemmer(std::string_view word)
      : buf_(word), end_(static_cast<int>(word.size()) - 1) {}

  std::string Run() {
    if (end_ <= 1) return buf_;
    Step1ab();
    if (end_ > 0) {
      Step1c();
      Step2();
      Step3();
      Step4();
      Step5();
    }
    buf_.resize(static_cast<size_t>(end_ + 1));
    return buf_;
  }

 private:
  bool IsConsonant(int i) const {
    switch (buf_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in buf_[0..stem_end_].
  int Measure() const {
    int n = 0;
    int i = 0;
    for (;;) {
      if (i > stem_end_) return n;
      if (!IsConsonant(i)) break;
      ++i;
    }
    ++i;
    for (;;) {
      for (;;) {
        if (i > stem_end_) return n;
        if (IsConsonant(i)) break;
        ++i;
      }
      ++i;
      ++n;
      for (;;) {
        if (i > stem_end_) return n;
        if (!IsConsonant(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool VowelInStem() const {
    for (int i = 0; i <= stem_end_; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool DoubleConsonant(int j) const {
    if (j < 1) return false;
    if (buf_[j] != buf_[j - 1]) return false;
    return IsConsonant(j);
  }

  // consonant-vowel-consonant ending at i, last consonant not w, x or y.
  bool Cvc(int i) const {
    if (i < 2 || !IsConsonant(i) || IsConsonant(i - 1) ||
        !IsConsonant(i - 2)) {
      return false;
    }
    const char ch = buf_[i];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool Ends(std::string_view suffix) {
    const int length = static_cast<int>(suffix.size());
    if (length > end_ + 1) return false;
    if (std::string_view(buf_).substr(end_ - length + 1, length) != suffix) {
      return false;
    }
    stem_end_ = end_ - length;
    return true;
  }

  void SetTo(std::string_view replacement) {
    const int length = static_cast<int>(replacement.size());
    buf_.replace(stem_end_ + 1, buf_.size() - (stem_end_ + 1), replacement);
    end_ = stem_end_ + length;
  }

  void ReplaceIfMeasured(std::string_view replacement) {
    if (Measure() > 0) SetTo(replacement);
  }

  // Plurals and -ed / -ing.
  void Step1ab() {
    if (buf_[end_] == 's') {
      if (Ends("sses")) {
        end_ -= 2;
      } else if (Ends("ies")) {
        SetTo("i");
      } else if (buf_[end_ - 1] != 's') {
        --end_;
      }
    }
    if (Ends("eed")) {
      if (Measure() > 0) --end_;
    } else if ((Ends("ed") || Ends("ing")) && VowelInStem()) {
      end_ = stem_end_;
      buf_.resize(static_cast<size_t>(end_ + 1));
      if (Ends("at")) {
        SetTo("ate");
      } else if (Ends("bl")) {
        SetTo("ble");
      } else if (Ends("iz")) {
        SetTo("ize");
      } else if (DoubleConsonant(end_)) {
        --end_;
        const char ch = buf_[end_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++end_;
      } else {
        stem_end_ = end_;
        if (Measure() == 1 && Cvc(end_)) {
          buf_.resize(static_cast<size_t>(end_ + 1));
          SetTo("e");
        }
      }
    }
    buf_.resize(static_cast<size_t>(end_ + 1));
  }

  void Step1c() {
    if (Ends("y") && VowelInStem()) buf_[end_] = 'i';
  }

  void Step2() {
    if (end_ < 1) return;
    switch (buf_[end_ - 1]) {
      case 'a':
        if (Ends("ational")) { ReplaceIfMeasured("ate"); break; }
        if (Ends("tional")) { ReplaceIfMeasured("tion"); break; }
        break;
      case 'c':
        if (Ends("enci")) { ReplaceIfMeasured("ence"); break; }
        if (Ends("anci")) { ReplaceIfMeasured("ance"); break; }
        break;
      case 'e':
        if (Ends("izer")) { ReplaceIfMeasured("ize"); break; }
        break;
      case 'l':
        if (Ends("bli")) { ReplaceIfMeasured("ble"); break; }
        if (Ends("alli")) { ReplaceIfMeasured("al"); break; }
        if (Ends("entli")) { ReplaceIfMeasured("ent"); break; }
        if (Ends("eli")) { ReplaceIfMeasured("e"); break; }
        if (Ends("ousli")) { ReplaceIfMeasured("ous"); break; }
        break;
      case 'o':
        if (Ends("ization")) { ReplaceIfMeasured("ize"); break; }
        if (Ends("ation")) { ReplaceIfMeasured("ate"); break; }
        if (Ends("ator")) { ReplaceIfMeasured("ate"); break; }
        break;
      case 's':
        if (Ends("alism")) { ReplaceIfMeasured("al"); break; }
        if (Ends("iveness")) { ReplaceIfMeasured("ive"); break; }
        if (Ends("fulness")) { ReplaceIfMeasured("ful"); break; }
        if (Ends("ousness")) { ReplaceIfMeasured("ous"); break; }
        break;
      case 't':
        if (Ends("aliti")) { ReplaceIfMeasured("al"); break; }
        if (Ends("iviti")) { ReplaceIfMeasured("ive"); break; }
        if (Ends("biliti")) { ReplaceIfMeasured("ble"); break; }
        break;
      case 'g':
        if (Ends("logi")) { ReplaceIfMeasured("log"); break; }
        break;
      default:
        break;
    }
  }

  void Step3() {
    switch (buf_[end_]) {
      case 'e':
        if (Ends("icate")) { ReplaceIfMeasured("ic"); break; }
        if (Ends("ative")) { ReplaceIfMeasured(""); break; }
        if (Ends("alize")) { ReplaceIfMeasured("al"); break; }
        break;
      case 'i':
        if (Ends("iciti")) { ReplaceIfMeasured("ic"); break; }
        break;
      case 'l':
        if (Ends("ical")) { ReplaceIfMeasured("ic"); break; }
        if (Ends("ful")) { ReplaceIfMeasured(""); break; }
        break;
      case 's':
        if (Ends("ness")) { ReplaceIfMeasured(""); break; }
        break;
      default:
        break;
    }
  }

  void Step4() {
    if (end_ < 1) return;
    bool matched = false;
    switch (buf_[end_ - 1]) {
      case 'a':
        matched = Ends("al");
        break;
      case 'c':
        matched = Ends("ance") || Ends("ence");
        break;
      case 'e':
        matched = Ends("er");
        break;
      case 'i':
        matched = Ends("ic");
        break;
      case 'l':
        matched = Ends("able") || Ends("ible");
        break;
      case 'n':
        matched = Ends("ant") || Ends("ement") || Ends("ment") || Ends("ent");
        break;
      case 'o':
        if (Ends("ion") && stem_end_ >= 0 &&
            (buf_[stem_end_] == 's' || buf_[stem_end_] == 't')) {
          matched = true;
        } else {
          matched = Ends("ou");
        }
        break;
      case 's':
        matched = Ends("ism");
        break;
      case 't':
        matched = Ends("ate") || Ends("iti");
        break;
      case 'u':
        matched = Ends("ous");
        break;
      case 'v':
        matched = Ends("ive");
        break;
      case 'z':
        matched = Ends("ize");
        break;
      default:
        break;
    }
    if (matched && Measure() > 1) {
      end_ = stem_end_;
      buf_.resize(static_cast<size_t>(end_ + 1));
    }
  }

  // Final -e and -ll.
  void Step5() {
    stem_end_ = end_;
    if (buf_[end_] == 'e') {
      const int m = Measure();
      if (m > 1 || (m == 1 && !Cvc(end_ - 1))) --end_;
    }
    if (buf_[end_] == 'l' && DoubleConsonant(end_) && Measure() > 1) --end_;
    buf_.resize(static_cast<size_t>(end_ + 1));
  }

  std::string buf_;
  int end_;
  int stem_end_ = 0;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  return PorterStemmer(word).Run();
}

}  // namespace topicforge
