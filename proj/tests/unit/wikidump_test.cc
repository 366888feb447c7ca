// Copyright 2026 The ver-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include <gtest/gtest.h>

#include "test_util.h"
#include "verforge/error.h"
#include "verforge/wikidump.h"

namespace verforge {
namespace {

std::string Page(const std::string &title, int ns, const std::string &text,
                 bool redirect = false) {
  std::string out = "<page><title>" + title + "</title><ns>" +
                    std::to_string(ns) + "</ns><id>7</id>";
  if (redirect) out += "<redirect title=\"X\" />";
  return out + "<revision><id>1</id><text xml:space=\"preserve\">" + text +
         "</text></revision></page>";
}

std::vector<RawPage> StreamAll(const std::string &xml, SkipTally *tally = nullptr,
                               size_t chunk = 1 << 20) {
  std::istringstream in(xml);
  PageStream stream(in, chunk);
  std::vector<RawPage> pages;
  RawPage page;
  while (stream.Next(&page)) pages.push_back(page);
  if (tally != nullptr) *tally = stream.skipped();
  return pages;
}

void ExpectAnchorsConsistent(const StrippedText &s) {
  size_t last_end = 0;
  for (const LinkAnchor &a : s.anchors) {
    ASSERT_LT(a.byte_start, a.byte_end);
    ASSERT_LE(a.byte_end, s.plain_text.size());
    EXPECT_EQ(s.plain_text.substr(a.byte_start, a.byte_end - a.byte_start),
              a.mention);
    EXPECT_GE(a.byte_start, last_end);
    EXPECT_FALSE(a.target.empty());
    last_end = a.byte_end;
  }
}

TEST(PageStreamTest, SkipsRedirectsAndKeepsOrder) {
  std::string xml = "<mediawiki>" + Page("Alpha", 0, "a") +
                    Page("Beta", 0, "#REDIRECT [[Alpha]]") + Page("Gamma", 0, "g") +
                    Page("Delta", 0, "d", true) + Page("Epsilon", 0, "e") +
                    "</mediawiki>";
  SkipTally tally;
  std::vector<RawPage> pages = StreamAll(xml, &tally);
  ASSERT_EQ(pages.size(), 3u);
  EXPECT_EQ(pages[0].title, "Alpha");
  EXPECT_EQ(pages[1].title, "Gamma");
  EXPECT_EQ(pages[2].title, "Epsilon");
  EXPECT_EQ(tally.redirect, 2u);
  EXPECT_EQ(tally.total(), 2u);
}

TEST(PageStreamTest, EmptyInputYieldsNothing) {
  EXPECT_TRUE(StreamAll("").empty());
  EXPECT_TRUE(StreamAll("<mediawiki></mediawiki>").empty());
}

TEST(PageStreamTest, MarkupPassesThroughVerbatim) {
  std::string markup = "{{Outer|{{Inner|x}}}} text &amp; [[Link]]";
  std::vector<RawPage> pages =
      StreamAll("<mediawiki>" + Page("T", 0, "{{Outer|{{Inner|x}}}} text &amp;amp; [[Link]]") +
                "</mediawiki>");
  ASSERT_EQ(pages.size(), 1u);
  EXPECT_EQ(pages[0].markup, markup);
  EXPECT_EQ(pages[0].page_id, 7u);
}

TEST(PageStreamTest, NamespaceAndTitleRules) {
  SkipTally tally;
  std::vector<RawPage> pages = StreamAll(
      "<mediawiki>" + Page("Talk:A", 1, "x") + Page("", 0, "x") +
          Page("Kept", 0, "x") + "</mediawiki>",
      &tally);
  ASSERT_EQ(pages.size(), 1u);
  EXPECT_EQ(tally.non_article, 1u);
  EXPECT_EQ(tally.invalid, 1u);
}

TEST(PageStreamTest, SmallChunksGiveSameResult) {
  std::string xml = testing_util::ReadFile(testing_util::FixturePath("mini_dump.xml"));
  std::vector<RawPage> big = StreamAll(xml);
  std::vector<RawPage> small = StreamAll(xml, nullptr, 7);
  ASSERT_EQ(big.size(), small.size());
  for (size_t i = 0; i < big.size(); ++i) {
    EXPECT_EQ(big[i].title, small[i].title);
    EXPECT_EQ(big[i].markup, small[i].markup);
  }
}

TEST(PageStreamTest, MalformedXmlNamesOffset) {
  for (const std::string &bad :
       {std::string("<mediawiki><page><title>x</titel></page></mediawiki>"),
        std::string("<mediawiki><page><title>x</title>"),
        std::string("<mediawiki><page"), std::string("<a></a><b></b>")}) {
    try {
      StreamAll(bad);
      ADD_FAILURE() << "no error for " << bad;
    } catch (const Error &e) {
      EXPECT_EQ(e.kind(), ErrorKind::kData);
      EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
    }
  }
}

TEST(StripTest, PipedLink) {
  StrippedText s = StripWikitext("[[machine learning|ML]] is fun");
  EXPECT_EQ(s.plain_text, "ML is fun");
  ASSERT_EQ(s.anchors.size(), 1u);
  EXPECT_EQ(s.anchors[0], (LinkAnchor{"ML", "Machine learning", 0, 2}));
}

TEST(StripTest, PlainLink) {
  StrippedText s = StripWikitext("[[Water]] boils.");
  EXPECT_EQ(s.plain_text, "Water boils.");
  ASSERT_EQ(s.anchors.size(), 1u);
  EXPECT_EQ(s.anchors[0], (LinkAnchor{"Water", "Water", 0, 5}));
}

TEST(StripTest, TemplatesAndRefsRemoved) {
  StrippedText s = StripWikitext("{{Infobox x}}Text with <ref>cite</ref> end.");
  EXPECT_EQ(s.plain_text, "Text with end.");
  EXPECT_TRUE(s.anchors.empty());
  EXPECT_TRUE(s.warnings.empty());
}

TEST(StripTest, RemovalRules) {
  EXPECT_EQ(StripWikitext("'''Bold''' and ''italic''").plain_text, "Bold and italic");
  EXPECT_EQ(StripWikitext("a<!-- hidden -->b").plain_text, "ab");
  EXPECT_EQ(StripWikitext("== Heading ==\nBody").plain_text, "Body");
  EXPECT_EQ(StripWikitext("x [[File:A.png|thumb|cap [[Y]]]] y").plain_text, "x y");
  EXPECT_EQ(StripWikitext("x\n{| class=\"t\"\n| a\n|}\ny").plain_text, "x\n\ny");
  EXPECT_EQ(StripWikitext("[[Category:Things]]Text").plain_text, "Text");
  EXPECT_EQ(StripWikitext("see [https://e.org the site] and [https://f.org]").plain_text,
            "see the site and");
  EXPECT_EQ(StripWikitext("A&amp;B&nbsp;C").plain_text, "A&B C");
  EXPECT_EQ(StripWikitext("H<sub>2</sub>O").plain_text, "H2O");
  EXPECT_EQ(StripWikitext("<nowiki>[[x]]</nowiki>").plain_text, "[[x]]");
  EXPECT_EQ(StripWikitext("word{{cite}}, next").plain_text, "word, next");
}

TEST(StripTest, LinkVariants) {
  StrippedText trail = StripWikitext("many [[data set]]s here");
  EXPECT_EQ(trail.plain_text, "many data sets here");
  ASSERT_EQ(trail.anchors.size(), 1u);
  EXPECT_EQ(trail.anchors[0].mention, "data sets");
  EXPECT_EQ(trail.anchors[0].target, "Data set");

  StrippedText pipe_trick = StripWikitext("[[Mercury (planet)|]] shines");
  EXPECT_EQ(pipe_trick.plain_text, "Mercury shines");
  EXPECT_EQ(pipe_trick.anchors[0].target, "Mercury (planet)");

  StrippedText fragment = StripWikitext("[[data_mining#History|history]]");
  EXPECT_EQ(fragment.anchors[0].target, "Data mining");
}

TEST(StripTest, UnbalancedIsLiteralWithWarning) {
  StrippedText link = StripWikitext("a [[broken link");
  EXPECT_EQ(link.plain_text, "a [[broken link");
  ASSERT_EQ(link.warnings.size(), 1u);
  EXPECT_EQ(link.warnings[0].kind, "unbalanced_link");

  StrippedText tmpl = StripWikitext("x {{open");
  EXPECT_EQ(tmpl.plain_text, "x {{open");
  EXPECT_EQ(tmpl.warnings.at(0).kind, "unbalanced_template");
}

TEST(StripTest, FuzzNeverThrowsAndKeepsAnchorInvariants) {
  const std::vector<std::string> pieces = {
      "[[", "]]", "{{", "}}", "|", "'''", "''", "<ref>", "</ref>", "<!--",
      "-->", "\n", "==", "{|", "|}", "[", "]", "word", "Cap", " ", "#",
      "&amp;", "<br/>", ":", "*", "\xC3\xA9", "\xFF", "<", ">", "[[A|b]]"};
  testing_util::Gen gen(11);
  for (int round = 0; round < 3000; ++round) {
    std::string markup;
    size_t n = gen.Int(0, 30);
    for (size_t i = 0; i < n; ++i) markup += gen.Pick(pieces);
    StrippedText a = StripWikitext(markup);
    StrippedText b = StripWikitext(markup);
    EXPECT_EQ(a.plain_text, b.plain_text);
    ExpectAnchorsConsistent(a);
  }
}

TEST(CleanPageTest, CarriesTitleAndAnchors) {
  RawPage raw{"Data mining", 3, "'''Data mining''' uses [[statistics]].", 0};
  CleanPage page = CleanRawPage(raw);
  EXPECT_EQ(page.title, "Data mining");
  EXPECT_EQ(page.page_id, 3u);
  EXPECT_EQ(page.plain_text, "Data mining uses statistics.");
  ASSERT_EQ(page.anchors.size(), 1u);
  EXPECT_EQ(page.anchors[0].target, "Statistics");
}

}  // namespace
}  // namespace verforge
