#!/usr/bin/env python3
"""Regenerate the bundled lexical resources.

Writes:
  resources/irregular_forms.tsv   hand-maintained exception table (from
                                  the lists embedded below)
  resources/pos_lexicon.tsv       curated lemma lists expanded with their
                                  inflected forms
  resources/stub_frequencies.tsv  unigram counts from English prose found
                                  on the build host (package docs)

The spelling rules in this script mirror core/src/inflection.cpp; the
irregular table covers everything the rules get wrong.
"""

import io
import os
import re
import sys
import tokenize
from collections import Counter

VOWELS = set("aeiou")

# --------------------------------------------------------------------------
# irregular forms
# --------------------------------------------------------------------------

# lemma past [past_part]  (past_part defaults to past)
IRREGULAR_VERBS = """
arise arose arisen
awake awoke awoken
be was been
bear bore borne
beat beat beaten
become became become
befall befell befallen
begin began begun
behold beheld beheld
bend bent
bet bet
bid bid
bind bound
bite bit bitten
bleed bled
blow blew blown
break broke broken
breed bred
bring brought
broadcast broadcast
build built
burst burst
buy bought
cast cast
catch caught
choose chose chosen
cling clung
come came come
cost cost
creep crept
cut cut
deal dealt
dig dug
dive dove dived
do did done
draw drew drawn
drink drank drunk
drive drove driven
eat ate eaten
fall fell fallen
feed fed
feel felt
fight fought
find found
flee fled
fling flung
fly flew flown
forbid forbade forbidden
foresee foresaw foreseen
forget forgot forgotten
forgive forgave forgiven
forsake forsook forsaken
freeze froze frozen
get got gotten
give gave given
go went gone
grind ground
grow grew grown
hang hung
have had
hear heard
hide hid hidden
hit hit
hold held
hurt hurt
keep kept
kneel knelt
know knew known
lay laid
lead led
leap leapt
leave left
lend lent
let let
lie lay lain
light lit
lose lost
make made
mean meant
meet met
mislead misled
misunderstand misunderstood
outdo outdid outdone
overcome overcame overcome
overtake overtook overtaken
overthrow overthrew overthrown
partake partook partaken
pay paid
put put
quit quit
read read
redo redid redone
repay repaid
rid rid
ride rode ridden
ring rang rung
rise rose risen
run ran run
say said
see saw seen
seek sought
sell sold
send sent
set set
shake shook shaken
shed shed
shine shone
shoot shot
show showed shown
shrink shrank shrunk
shut shut
sing sang sung
sink sank sunk
sit sat
slay slew slain
sleep slept
slide slid
sling slung
slit slit
speak spoke spoken
spend spent
spin spun
spit spat
split split
spread spread
spring sprang sprung
stand stood
steal stole stolen
stick stuck
sting stung
stink stank stunk
stride strode stridden
strike struck
strive strove striven
swear swore sworn
sweep swept
swim swam swum
swing swung
take took taken
teach taught
tear tore torn
tell told
think thought
throw threw thrown
thrust thrust
tread trod trodden
undergo underwent undergone
understand understood
undertake undertook undertaken
undo undid undone
upset upset
wake woke woken
wear wore worn
weave wove woven
weep wept
win won
wind wound
withdraw withdrew withdrawn
wring wrung
write wrote written
"""

# lemma form surface  (one-off verb entries)
VERB_EXTRAS = """
be third_sg is
be gerund being
have third_sg has
begin gerund beginning
forget gerund forgetting
upset gerund upsetting
die past died
die third_sg dies
die gerund dying
lie past lied
lie third_sg lies
lie gerund lying
tie past tied
tie third_sg ties
tie gerund tying
add past added
add gerund adding
err past erred
err gerund erring
ebb past ebbed
ebb gerund ebbing
ache past ached
ache third_sg aches
ache gerund aching
quiz third_sg quizzes
prove past_part proven
swell past_part swollen
sow past_part sown
mow past_part mown
saw past_part sawn
sew past_part sewn
strew past_part strewn
shave past_part shaven
"""

# polysyllabic verbs that still double the final consonant
DOUBLING_VERBS = """
occur prefer refer transfer confer defer deter incur recur concur
commit permit admit submit omit emit transmit regret acquit allot
compel excel propel repel rebel patrol control equip kidnap worship
handicap format program
""".split()

# verbs ending -c take -ck before a vowel suffix
CK_VERBS = ["picnic", "panic", "traffic", "mimic", "frolic"]

# lemma plural
IRREGULAR_NOUNS = """
man men
woman women
child children
person people
foot feet
tooth teeth
goose geese
mouse mice
louse lice
ox oxen
analysis analyses
basis bases
crisis crises
thesis theses
hypothesis hypotheses
diagnosis diagnoses
emphasis emphases
oasis oases
axis axes
parenthesis parentheses
synthesis syntheses
synopsis synopses
criterion criteria
phenomenon phenomena
datum data
medium media
bacterium bacteria
curriculum curricula
memorandum memoranda
stratum strata
index indices
appendix appendices
matrix matrices
vertex vertices
radius radii
stimulus stimuli
alumnus alumni
fungus fungi
nucleus nuclei
syllabus syllabi
cactus cacti
corpus corpora
genus genera
sheep sheep
deer deer
fish fish
species species
series series
aircraft aircraft
offspring offspring
leaf leaves
loaf loaves
thief thieves
wolf wolves
shelf shelves
half halves
calf calves
self selves
elf elves
scarf scarves
knife knives
wife wives
life lives
hoof hooves
potato potatoes
tomato tomatoes
hero heroes
echo echoes
veto vetoes
torpedo torpedoes
embargo embargoes
bus buses
gas gases
virus viruses
bonus bonuses
campus campuses
status statuses
census censuses
lens lenses
quiz quizzes
shoe shoes
toe toes
foe foes
woe woes
hoe hoes
"""

# lemma comparative superlative
IRREGULAR_ADJS = """
good better best
bad worse worst
far farther farthest
little less least
much more most
many more most
well better best
simple simpler simplest
gentle gentler gentlest
noble nobler noblest
subtle subtler subtlest
able abler ablest
humble humbler humblest
ample ampler amplest
idle idler idlest
feeble feebler feeblest
stable stabler stablest
true truer truest
blue bluer bluest
odd odder oddest
"""


def syllables(word):
    groups, in_group = 0, False
    for i, c in enumerate(word):
        vowel = c in VOWELS or (c == "y" and i > 0)
        if vowel and not in_group:
            groups += 1
        in_group = vowel
    return groups or 1


def doubles(word):
    if len(word) < 2:
        return False
    last, prev = word[-1], word[-2]
    if last in VOWELS or last in "ywx":
        return False
    if prev not in VOWELS:
        return False
    if len(word) >= 3 and word[-3] in VOWELS:
        return False
    return syllables(word) == 1


def sibilant(word):
    return word.endswith(("s", "x", "z", "ch", "sh"))


class Rules:
    """Python mirror of the C++ spelling rules plus the irregular table."""

    def __init__(self):
        self.table = {}

    def add(self, lemma, form, surface):
        self.table[(lemma, form)] = surface

    def inflect(self, lemma, form):
        if (lemma, form) in self.table:
            return self.table[(lemma, form)]
        if form in ("third_sg", "plural"):
            if sibilant(lemma) or (form == "third_sg" and lemma.endswith("o")):
                return lemma + "es"
            if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in VOWELS:
                return lemma[:-1] + "ies"
            return lemma + "s"
        if form in ("past", "past_part"):
            if (lemma, "past") in self.table and form == "past_part":
                pass  # distinct past_part entries are explicit
            if lemma.endswith("e"):
                return lemma + "d"
            if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in VOWELS:
                return lemma[:-1] + "ied"
            if doubles(lemma):
                return lemma + lemma[-1] + "ed"
            return lemma + "ed"
        if form == "gerund":
            if lemma.endswith("ie"):
                return lemma[:-2] + "ying"
            if lemma.endswith("e") and not lemma.endswith(("ee", "oe", "ye")):
                return lemma[:-1] + "ing"
            if doubles(lemma):
                return lemma + lemma[-1] + "ing"
            return lemma + "ing"
        if form in ("comparative", "superlative"):
            tail = "est" if form == "superlative" else "er"
            if syllables(lemma) >= 3:
                return ("most " if form == "superlative" else "more ") + lemma
            if lemma.endswith("e"):
                return lemma + ("st" if form == "superlative" else "r")
            if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in VOWELS:
                return lemma[:-1] + "i" + tail
            if doubles(lemma):
                return lemma + lemma[-1] + tail
            return lemma + tail
        return lemma


def build_irregulars():
    rows = []
    rules = Rules()

    def emit(lemma, form, surface):
        rows.append((lemma, form, surface))
        rules.add(lemma, form, surface)

    for line in IRREGULAR_VERBS.strip().splitlines():
        parts = line.split()
        lemma, past = parts[0], parts[1]
        part = parts[2] if len(parts) > 2 else past
        emit(lemma, "past", past)
        emit(lemma, "past_part", part)
    for line in VERB_EXTRAS.strip().splitlines():
        lemma, form, surface = line.split()
        emit(lemma, form, surface)
        if form == "past" and (lemma, "past_part") not in rules.table:
            emit(lemma, "past_part", surface)
    for lemma in DOUBLING_VERBS:
        emit(lemma, "past", lemma + lemma[-1] + "ed")
        emit(lemma, "past_part", lemma + lemma[-1] + "ed")
        emit(lemma, "gerund", lemma + lemma[-1] + "ing")
    for lemma in CK_VERBS:
        emit(lemma, "past", lemma + "ked")
        emit(lemma, "past_part", lemma + "ked")
        emit(lemma, "gerund", lemma + "king")
    for line in IRREGULAR_NOUNS.strip().splitlines():
        lemma, plural = line.split()
        emit(lemma, "plural", plural)
    for line in IRREGULAR_ADJS.strip().splitlines():
        lemma, comp, sup = line.split()
        emit(lemma, "comparative", comp)
        emit(lemma, "superlative", sup)
    return rows, rules


# --------------------------------------------------------------------------
# POS lexicon
# --------------------------------------------------------------------------

FUNCTION_WORDS = """
the a an this that these those my your his her its our their some any no
every each either neither both all most more less few fewer little much
many another such what which whose
i you he she it we they me him us them mine yours hers ours theirs myself
yourself himself herself itself ourselves themselves who whom whoever
someone anyone everyone nobody somebody anybody everybody something
anything everything nothing
in on at by for with from into onto of to about above across after against
along among around before behind below beneath beside between beyond
during except inside near off out outside over past since through
throughout till toward towards under until up upon within without
and or but nor so yet if because although though while whereas unless
when whenever where wherever why how than as
am is are was were be been being do does did done doing have has had
having will would can could may might must shall should ought
not never always often sometimES usually rarely seldom also too very
quite rather almost enough just only even still already perhaps maybe
here there now then today tomorrow yesterday soon later again once twice
yes no please
""".lower()

VERBS = """
accept access accompany account accuse achieve acknowledge acquire act
adapt add address adjust admire admit adopt advance advise afford agree
aim allow announce answer anticipate apologize appeal appear apply
appoint appreciate approach approve argue arise arrange arrest arrive ask
assess assign assist assume assure attach attack attempt attend attract
avoid awake bake balance ban base bear beat become beg begin behave
believe belong bend benefit bet bind bite blame blend bless block blow
boil book boost borrow bother bounce bow brake break breathe breed bring
broadcast build burn burst bury buy calculate call calm campaign cancel
capture care carry cast catch cause cease celebrate challenge change
charge chase chat check cheer chew choose chop cite claim clarify clean conceal
clear climb cling close coach collapse collect combine come comfort
command comment commit communicate compare compete complain complete
compose conclude conduct confirm confront connect consider consist
construct consult consume contain continue contribute convert convince
cook cope copy correct cost count cover crash create cross cry cut dance
dare deal decide declare decline decrease dedicate defeat defend define
delay deliver demand demonstrate deny depart depend deploy describe
deserve design desire destroy detect determine develop devote die differ
dig diminish direct disagree disappear discover discuss dislike dismiss
display distribute disturb dive divide do dominate double doubt drag
drain draw dream dress drift drink drive drop drown dry earn ease eat
echo edit educate elect eliminate embrace emerge emphasize employ enable
encounter encourage end endure enforce engage enhance enjoy ensure enter
entertain escape establish estimate evaluate examine exceed exchange
exclude excuse execute exercise exist expand expect experience explain
explore expose express extend face fail fall fear feature feed feel
fight fill find finish fire fit fix flee float flood flow fly focus fold
follow forbid force forecast foresee forget forgive form forsake found
freeze frighten fulfill function gain gather generate get give glance go
govern grab grant grasp greet grind grow guarantee guard guess guide
handle hang happen harm hate have head heal hear heat help hesitate hide
highlight hire hit hold hope host hunt hurry hurt identify ignore
illustrate imagine implement imply import impose impress improve include
increase indicate influence inform inject injure insert insist inspect
inspire install intend interact interpret interrupt introduce invest
investigate invite involve isolate issue join joke judge jump justify
keep kick kill kiss kneel knock know label lack land last laugh launch
lay lead lean leap learn leave lend let lift light like limit link list
listen live load locate lock look lose love lower maintain make manage
manufacture march mark marry match matter mean measure meet melt mention
mind miss mix modify monitor motivate mount move multiply name need
neglect negotiate nod note notice notify obey object observe obtain
occupy occur offer open operate oppose order organize outline overcome
overlook owe own pack paint participate pass pause pay perceive perform
permit persist persuade pick place plan play plead please pledge point
possess post postpone pour practice praise pray predict prefer prepare
present preserve press pretend prevent print proceed produce promise
promote propose protect protest prove provide publish pull punish pitch
purchase pursue push put qualify question quit quote raise reach react
read realize receive recognize recommend record recover reduce refer
reflect refuse regard register regret reject relate relax release rely
remain remark remember remind remove render repair repeat replace reply
report represent request require rescue research reserve resign resist
resolve respond restore restrict result retain retire return reveal
review revise reward ride ring rise risk roll rub ruin rule run rush
satisfy save say scan scare schedule score scratch scream seal search
seat secure see seek seem seize select sell send sense separate serve
set settle shake shape share shift shine shoot shop shout show shrink
shut sigh sign sing sink sit sleep slide slip smell smile snap soar
solve sort sound speak specify spend spill spin split spoil spread
spring stand stare start state stay steal stem step stick stimulate stir
stop store stress stretch strike strive struggle study submit succeed
suffer suggest suit supply support suppose surround survive suspect
sustain swear sweep swell swim swing switch take talk target taste teach
tear tell tend terminate test thank think threaten throw tie tolerate
touch tour trace track trade train transfer transform translate
transmit travel treat tremble trigger trust try tumble turn undergo
understand undertake unite update upgrade urge use value vanish vary
verify visit vote wait wake walk wander want warn wash waste watch wave
weaken wear weigh welcome whisper widen win wish withdraw witness wonder
work worry wrap write yell yield
""".split()

NOUNS = """
ability absence access accident account achievement act action activity
actor addition address administration adult advance advantage adventure
advertising advice affair age agency agenda agent agreement aid aim air
aircraft airline airport alarm album alcohol alternative ambition amount
analysis analyst ancestor anger angle animal ankle anniversary
announcement answer anxiety apartment appeal appearance apple
application appointment approach approval area argument arm army
arrangement arrival art article artist aspect assessment asset
assignment assistance assistant association assumption atmosphere
attack attempt attention attitude audience author authority autumn
average award awareness baby back background bag balance ball band bank
bar barrier base baseball basis basket bath battle beach bear beauty bed
beer beginning behavior being belief bell belt benefit bicycle bike bill
bird birth birthday bit blame blanket block blood board boat body bone
bonus book border boss bottle bottom boundary bowl box boy brain branch
bread breakfast breast breath brick bridge brother budget building bus
bush business butter button cabinet cake calendar call camera camp
campaign campus cancer candidate capacity capital captain car carbon
card care career cargo carpet case cash cat category cattle cause
ceiling cell census center century ceremony chain chair chairman
challenge champion chance change channel chapter character charge
charity chart chest chicken chief child childhood chip chocolate choice
church cigarette circle citizen city claim class classroom client
climate clock cloth clothes cloud club coach coal coast coat code coffee
collection college color column combination comfort command comment
commission commitment committee communication community company
comparison competition complaint computer concept concern conclusion
condition conference confidence conflict confusion connection
consequence construction consumer contact content contest context
contract contrast contribution control conversation cook copy corn
corner corporation cost cotton council country county couple courage
course court cousin cover cow craft cream credit crew crime crisis
criterion critic criticism crop crowd culture cup currency customer
cycle dad damage dance danger data database date daughter day deal death
debate debt decade decision defense deficit definition degree delivery
demand department departure deposit depression depth description desert
design desire desk detail development device devil diamond diet
difference difficulty dinner direction director dirt disaster
discipline discount discovery discussion disease dish distance
distribution district document dog door doubt draft drama drawer drawing
dream dress drink driver drug duty ear earth east economy edge editor
education effect efficiency effort egg election element elevator
emergency emotion emphasis employee employer employment end enemy energy
engine engineer entrance environment episode equipment error escape
essay estate estimate evening event evidence exam example exchange
excitement excuse exercise exit expansion experience expert explanation
explosion expression extent eye face facility fact factor factory
failure faith fall family fan farm farmer fashion father fault feature
fee feedback feeling fence festival fiction field fight figure file film
finding finger fire firm fish fishing flag flight floor flower fly focus
food foot football force forest form fortune foundation frame freedom
friend friendship front fruit fuel fun function fund furniture future
gain game gap garage garden gas gate gear gene general gift girl glass
goal gold golf government grade grain grandmother grass ground group
growth guard guess guest guidance guide guitar gun guy habit hair half
hall hand handle harm hat hate head health heart heat height hell help
hero highway hill history hit hobby hold hole holiday home homework
honey honor hope horror horse hospital host hotel hour house household
housing human humor hunt husband ice idea identity image imagination
impact importance impression improvement incident income increase
independence indication individual industry inflation information
initiative injury insect inside inspection inspector instance
instruction instrument insurance intention interaction interest
internet interview introduction investment invitation iron island issue
item jacket job joint joke journey judge judgment juice jump jury
justice kid king kitchen knee knife knowledge lab label labor lack
ladder lady lake land language law lawyer layer leader leadership league
lecture leg length lesson letter level library lie life light limit
line link lip list literature load loan location lock log loss love
luck lunch machine magazine mail main maintenance majority man
management manager manner manufacturer map margin mark market marketing
marriage master match material math matter meal meaning measure
measurement meat media medicine medium meeting member membership memory
menu mess message metal method middle midnight milk mind mine minimum
minister minority minute mirror mission mistake mixture mode model mom
moment money monitor month mood morning mortgage mother motion motor
mountain mouse mouth move movie mud muscle music musician name nation
nature neck automobile physician festivity castle fence dawn
cottage physician gala need network news newspaper night noise north nose note
notice novel number nurse object objective obligation occasion
offer office officer official oil operation opinion opportunity option
orange order organization outcome output oven owner package page pain
painting pair panel paper parent park part partner party passage
passenger passion path patience patient pattern pause payment peace peak
pen penalty people percentage perception performance period permission
person personality perspective phase philosophy phone photo phrase
physics piano picture piece pin pipe pitch pizza place plan plane plant
plate platform play player pleasure plenty poem poet poetry point police
policy politics pollution pool population position possession
possibility post pot potato poverty power practice preference presence
present president pressure price pride priest priority prison prisoner
problem procedure process produce product profession professor profile
profit program progress project promise promotion proof property
proposal protection psychology public purpose quality quantity quarter
queen question quiz race radio rain range rank rate ratio reaction
reality reason recipe recognition recommendation record recording
reference reflection refrigerator region relation relationship release
relief religion remark rent repair reply report republic reputation
request requirement research reserve resident resolution resource
respect response responsibility rest restaurant result return revenue
review revolution reward rhythm rice ride ring rise risk river road rock
role roof room rope rose routine row rule sale salad salary sample
sand satisfaction scale scene schedule scheme school science scientist
score screen sea search season seat second secret secretary section
sector security selection self sense sentence series session set
setting shape share shelter shift ship shirt shock shoe shop shopping
shoulder show side sign signal signature significance silence silver
singer sink sir sister site situation size skill skin sky sleep slice
slide smoke snow society sock software soil soldier solution song sort
sound soup source south space speaker specialist species speech speed
spirit sport spot spring square staff stage standard star start state
statement station status steak steel step stick stock stomach stone
storage store storm story stranger strategy street strength stress
stretch string structure struggle student studio study stuff style
subject success suggestion summer sun supply support surface surgery
surprise survey suspect sweater swimming switch symbol sympathy system
table tackle tale talent talk tank target task taste tax tea teacher
team tear technique technology telephone television temperature tension
term test text thanks theme theory thing thought throat ticket tide time
tip title tobacco today tone tongue tooth top topic total touch tour
tourist towel tower town toy track trade tradition traffic train
trainer training transition transport travel treat treatment tree trend
trial trick trip truck trust truth tune turn twist type uncle
understanding union unit university use user vacation valley value van
variation variety vegetable vehicle version victim victory video view
village violence vision visit visitor voice volume vote wage wait walk
wall war warning wash waste watch water wave way weakness wealth weapon
weather web wedding week weekend weight welcome west wheel while wife
will wind window wine wing winner winter wish woman wood word work
worker world worry wound writer writing yard year youth zone
""".split()

ADJECTIVES = """
able absolute academic acceptable accurate active actual additional
administrative adult advanced afraid aggressive alive alternative
amazing ancient angry annual anxious apparent appropriate automatic
available average aware awful bad basic beautiful big bitter black
blind blue boring brave brief bright brilliant broad brown busy calm
capable careful cheap chemical civil classic clean clear clever clinical
close cold comfortable commercial common competitive complete complex
confident conscious consistent constant contemporary convenient cool
corporate correct crazy creative critical crucial cultural curious
current cute dangerous dark dead deep democratic dependent desperate
different difficult digital direct dirty distinct domestic double dry
due dull eager early eastern easy economic educational effective
efficient electric electrical electronic emotional empty enormous
entire environmental equal essential ethnic exact excellent exciting
existing expensive experimental external extra extreme fair false
familiar famous fast fat federal fellow female few final financial fine
firm fit flat folk foreign formal former fresh friendly full fun
fundamental funny future general gentle genuine glad global golden good
grand great green gross guilty happy hard healthy heavy helpful high
historic historical honest hot huge human hungry ideal identical ill
immediate important impossible impressive independent individual
industrial informal inner intelligent intense internal international
joint junior key kind large late latter lazy leading legal level light
likely limited little live local logical lonely long loose loud low
lucky mad main major male massive mean medical mental middle military
minor mobile moral narrow national native natural nearby neat necessary
negative nervous neutral new nice normal northern numerous obvious odd
official old only open opposite ordinary organic original other outer
overall particular past patient peaceful perfect permanent personal
physical plain pleasant polite political poor popular positive possible
potential powerful practical precious precise pregnant previous primary
prime principal prior private probable professional proper proud public
pure quick quiet rapid rare raw ready real realistic reasonable recent
regional regular relative relevant reliable religious remarkable remote
responsible rich right rough round royal rural sad safe salty
scientific secret secure senior sensitive separate serious severe sharp
short sick significant silent silly similar simple single slight slow
small smart smooth social soft solid sorry southern spare special
specific spiritual stable standard steady steep straight strange strict
strong stupid subtle successful sudden sufficient suitable sweet tall
technical temporary terrible thick thin tight tiny tired top total
tough traditional tragic true typical ugly unable unfair unique united
universal unknown unlikely unusual upper upset urban useful usual vast
violent visible visual vital warm weak wealthy weird western wet white
whole wide wild willing wise wonderful wooden working worried wrong
yellow young
""".split()

ADVERBS = """
abroad absolutely accordingly actually additionally afterwards almost
alone already altogether anyway apparently approximately barely
basically carefully certainly clearly closely completely consequently
considerably constantly currently daily deeply definitely deliberately
directly downtown dramatically easily effectively elsewhere entirely
equally especially essentially eventually exactly extremely fairly
finally forever formerly forward frequently fully furthermore generally
gently gradually greatly hardly heavily highly hopefully however
immediately increasingly indeed initially instead largely lately
likewise literally mainly meanwhile merely mostly namely naturally
nearly necessarily nevertheless newly nonetheless normally obviously
occasionally otherwise overseas particularly partly perfectly
permanently personally possibly practically precisely previously
primarily probably properly quickly quietly rapidly rarely recently
regularly relatively roughly sadly seriously severely shortly
significantly similarly simply slightly slowly smoothly somewhat
specifically strongly subsequently substantially successfully suddenly
sufficiently surely surprisingly therefore thoroughly thus tightly
together totally truly typically ultimately unfortunately virtually
widely
""".split()


def build_pos_lexicon(rules):
    tags = {}

    def add(word, letter, front=False):
        word = word.strip().lower()
        if not word or not re.fullmatch(r"[a-z']+", word):
            return
        cur = tags.setdefault(word, "")
        if letter in cur:
            return
        tags[word] = (letter + cur) if front else (cur + letter)

    for word in FUNCTION_WORDS.split():
        add(word, "O", front=True)
    for lemma in NOUNS:
        add(lemma, "N")
        add(rules.inflect(lemma, "plural"), "N")
    for lemma in VERBS:
        add(lemma, "V")
        for form in ("third_sg", "past", "past_part", "gerund"):
            add(rules.inflect(lemma, form), "V")
    for lemma in ADJECTIVES:
        add(lemma, "J")
        if syllables(lemma) < 3:
            comp = rules.inflect(lemma, "comparative")
            sup = rules.inflect(lemma, "superlative")
            if " " not in comp:
                add(comp, "J")
                add(sup, "J")
    for word in ADVERBS:
        add(word, "R")
    # gerunds double as nouns, participles as adjectives
    for lemma in VERBS:
        gerund = rules.inflect(lemma, "gerund")
        if gerund in tags:
            add(gerund, "N")
        part = rules.inflect(lemma, "past_part")
        if part in tags:
            add(part, "J")
    return tags


# --------------------------------------------------------------------------
# stub frequencies from on-host English prose
# --------------------------------------------------------------------------

DOC_ROOTS = [
    "/usr/share/doc",
    "/usr/share/common-licenses",
    "/usr/lib/python3.10",
    "/usr/local/lib/python3.10/dist-packages",
]
TEXT_SUFFIXES = (".txt", ".md", ".rst", ".py")
WORD_RE = re.compile(r"[a-z]{2,}")
MAX_FILES_PER_ROOT = 20000
MAX_BYTES_PER_FILE = 400_000


def python_prose(data):
    """Docstrings and comments only; code identifiers would swamp the counts."""
    chunks = []
    try:
        for tok in tokenize.tokenize(io.BytesIO(data).readline):
            if tok.type == tokenize.COMMENT:
                chunks.append(tok.string.lstrip("#"))
            elif tok.type == tokenize.STRING and len(tok.string) > 40:
                chunks.append(tok.string)
    except (tokenize.TokenError, SyntaxError, IndentationError, ValueError):
        pass
    return "\n".join(chunks)


def harvest_counts():
    counts = Counter()
    file_hits = Counter()
    for root in DOC_ROOTS:
        seen = 0
        for dirpath, dirnames, filenames in os.walk(root):
            dirnames.sort()
            for name in sorted(filenames):
                if not name.endswith(TEXT_SUFFIXES):
                    continue
                seen += 1
                if seen > MAX_FILES_PER_ROOT:
                    break
                path = os.path.join(dirpath, name)
                try:
                    with open(path, "rb") as f:
                        data = f.read(MAX_BYTES_PER_FILE)
                except OSError:
                    continue
                if name.endswith(".py"):
                    text = python_prose(data).lower()
                else:
                    text = data.decode("utf-8", "ignore").lower()
                words = set()
                for match in WORD_RE.finditer(text):
                    word = match.group()
                    counts[word] += 1
                    words.add(word)
                for word in words:
                    file_hits[word] += 1
            if seen > MAX_FILES_PER_ROOT:
                break
    return counts, file_hits


def build_frequencies(pos_words, limit=20000):
    counts, file_hits = harvest_counts()
    dictionary = {w for w in pos_words if re.fullmatch(r"[a-z]{2,24}", w)}
    for word in dictionary:
        counts[word] += 0 if counts[word] else 1  # dictionary floor
    # dictionary words always ship; corpus words fill the remaining slots
    kept = [(w, counts[w]) for w in dictionary]
    rest = [
        (w, c)
        for w, c in counts.items()
        if w not in dictionary and 2 <= len(w) <= 24 and file_hits[w] >= 3
    ]
    rest.sort(key=lambda wc: (-wc[1], wc[0]))
    kept.extend(rest[: max(0, limit - len(kept))])
    kept.sort(key=lambda wc: (-wc[1], wc[0]))
    return kept[:limit]


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "resources"
    os.makedirs(out_dir, exist_ok=True)

    rows, rules = build_irregulars()
    with open(os.path.join(out_dir, "irregular_forms.tsv"), "w") as f:
        f.write("# lemma\tform\tsurface\n")
        for lemma, form, surface in rows:
            f.write(f"{lemma}\t{form}\t{surface}\n")
    print(f"irregular_forms.tsv: {len(rows)} entries")

    tags = build_pos_lexicon(rules)
    with open(os.path.join(out_dir, "pos_lexicon.tsv"), "w") as f:
        f.write("# word\ttags (coarse, preferred first)\n")
        for word in sorted(tags):
            f.write(f"{word}\t{' '.join(tags[word])}\n")
    print(f"pos_lexicon.tsv: {len(tags)} entries")

    freqs = build_frequencies(set(tags))
    with open(os.path.join(out_dir, "stub_frequencies.tsv"), "w") as f:
        f.write("# word\tcount\n")
        for word, count in freqs:
            f.write(f"{word}\t{count}\n")
    print(f"stub_frequencies.tsv: {len(freqs)} entries")


if __name__ == "__main__":
    main()
