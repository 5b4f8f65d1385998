"""Word lists for the desk lexicon; inflected forms are generated by build_desk_resources."""

# (infinitive, head tag) -- head is VER unless listed
VERBS = """
dormire mangiare bere essere:AUX portare andare giocare avere:AUX comprare leggere partire
lavorare spiegare ascoltare piovere restare vedere preparare volere:MOD potere:MOD dire stare
presentare scrivere mettere dimenticare costare piangere sposare approvare iniziare finire:isc
arrivare chiudere chiamare piacere sapere lavare correre volare splendere fare tirare aprire
parlare vincere cantare studiare dovere:MOD dare guardare tagliare ballare tornare ricevere
vivere visitare correggere costruire:isc attraversare rompere arrestare aumentare crescere
incontrare assumere riposare squillare rispondere profumare raccogliere suonare insegnare
funzionare muovere organizzare camminare perdere uscire riparare annunciare discutere aspettare
abbracciare durare offrire cucinare pagare consigliare abbaiare disegnare dipingere rilassare
telefonare conoscere nevicare pensare credere capire:isc imparare produrre firmare scadere
raggiungere sembrare venire tenere prendere cercare trovare pulire:isc sentire servire
rimanere cadere nascere morire entrare passare lasciare aiutare usare salire raccontare
"""

IRREGULAR = {
    "essere": {
        "pres": "sono sei è siamo siete sono", "impf": "ero eri era eravamo eravate erano",
        "fut": "sar", "sub": "sia sia sia siamo siate siano", "past": "fui fosti fu fummo foste furono",
        "part": "stat", "impr": "sii", "ger": "essendo",
    },
    "avere": {
        "pres": "ho hai ha abbiamo avete hanno", "fut": "avr",
        "sub": "abbia abbia abbia abbiamo abbiate abbiano",
        "past": "ebbi avesti ebbe avemmo aveste ebbero", "impr": "abbi",
    },
    "andare": {"pres": "vado vai va andiamo andate vanno", "fut": "andr", "impr": "va va'",
               "sub": "vada vada vada andiamo andiate vadano"},
    "fare": {"pres": "faccio fai fa facciamo fate fanno", "fut": "far", "impf_stem": "face",
             "part": "fatt", "impr": "fa fa'", "ger": "facendo",
             "past": "feci facesti fece facemmo faceste fecero"},
    "dire": {"pres": "dico dici dice diciamo dite dicono", "fut": "dir", "impf_stem": "dice",
             "part": "dett", "impr": "di'", "ger": "dicendo",
             "past": "dissi dicesti disse dicemmo diceste dissero"},
    "stare": {"pres": "sto stai sta stiamo state stanno", "fut": "star", "impr": "sta sta'",
              "sub": "stia stia stia stiamo stiate stiano"},
    "dare": {"pres": "do dai dà diamo date danno", "fut": "dar", "impr": "da da'",
             "sub": "dia dia dia diamo diate diano"},
    "volere": {"pres": "voglio vuoi vuole vogliamo volete vogliono", "fut": "vorr"},
    "potere": {"pres": "posso puoi può possiamo potete possono", "fut": "potr"},
    "dovere": {"pres": "devo devi deve dobbiamo dovete devono", "fut": "dovr",
               "sub": "debba debba debba dobbiamo dobbiate debbano"},
    "sapere": {"pres": "so sai sa sappiamo sapete sanno", "fut": "sapr", "impr": "sappi",
               "sub": "sappia sappia sappia sappiamo sappiate sappiano"},
    "bere": {"pres": "bevo bevi beve beviamo bevete bevono", "fut": "berr", "impf_stem": "beve",
             "part": "bevut", "ger": "bevendo"},
    "uscire": {"pres": "esco esci esce usciamo uscite escono"},
    "piacere": {"pres": "piaccio piaci piace piacciamo piacete piacciono", "part": "piaciut"},
    "raccogliere": {"pres": "raccolgo raccogli raccoglie raccogliamo raccogliete raccolgono",
                    "part": "raccolt"},
    "produrre": {"pres": "produco produci produce produciamo producete producono",
                 "fut": "produrr", "impf_stem": "produce", "part": "prodott", "ger": "producendo"},
    "venire": {"pres": "vengo vieni viene veniamo venite vengono", "fut": "verr", "part": "venut"},
    "tenere": {"pres": "tengo tieni tiene teniamo tenete tengono", "fut": "terr"},
    "rimanere": {"pres": "rimango rimani rimane rimaniamo rimanete rimangono", "fut": "rimarr",
                 "part": "rimast"},
    "salire": {"pres": "salgo sali sale saliamo salite salgono"},
    "morire": {"pres": "muoio muori muore moriamo morite muoiono", "part": "mort"},
    "vedere": {"fut": "vedr", "part": "vist"},
    "vivere": {"fut": "vivr", "part": "vissut"},
    "leggere": {"part": "lett"}, "scrivere": {"part": "scritt"}, "mettere": {"part": "mess"},
    "piangere": {"part": "piant"}, "chiudere": {"part": "chius"}, "correre": {"part": "cors"},
    "aprire": {"part": "apert"}, "vincere": {"part": "vint"}, "correggere": {"part": "corrett"},
    "rompere": {"part": "rott"}, "crescere": {"part": "cresciut"}, "assumere": {"part": "assunt"},
    "rispondere": {"part": "rispost"}, "muovere": {"part": "moss"}, "perdere": {"part": "pers"},
    "discutere": {"part": "discuss"}, "offrire": {"part": "offert"}, "dipingere": {"part": "dipint"},
    "conoscere": {"part": "conosciut"}, "raggiungere": {"part": "raggiunt"},
    "prendere": {"part": "pres"}, "nascere": {"part": "nat"}, "cadere": {"fut": "cadr"},
}

# lemma:gender[:plural]; "-" plural means invariable
NOUNS = """
cane:m gatto:m pesce:m bambina:f bambino:m latte:m latta:f olio:m borsa:f scuola:f porta:f
cucina:f mare:m amico:m:amici ragazzo:m ragazza:f parco:m sera:f libro:m giornale:m città:f:-
primavera:f treno:m azienda:f professore:m professoressa:f lezione:f studente:m attenzione:f
casa:f padre:m madre:f film:m:- cinema:m:- nonna:f nonno:m torta:f festa:f ufficio:m
medico:m:medici paziente:m giardino:m strada:f centro:m sindaco:m:sindaci progetto:m lettera:f
amica:f chiave:f macchina:f vino:m euro:m:- fame:f giugno:m governo:m legge:f cittadino:m
riunione:f mezzogiorno:m dottore:m società:f:- bilancio:m attivo:m canzone:f mamma:f piatto:m
pranzo:m prato:m uccello:m lago:m sole:m cielo:m freddo:m vento:m negozio:m caffè:m:-
bicchiere:m acqua:f fiume:m storia:f squadra:f partita:f tifoso:m stadio:m matematica:f
università:f:- lavoro:m mano:f:mani televisione:f pomeriggio:m cuoco:m verdura:f coltello:m
piazza:f pescatore:m porto:m e-mail:f:- direttore:m informazione:f museo:m martedì:m:-
domenica:f mostra:f prezzo:m fratello:m lingua:f giorno:m mercato:m maestra:f maestro:m
compito:m alunno:m posto:m villa:f fiore:m ristorante:m fondo:m via:f pizza:f mondo:m ponte:m
operaio:m zio:m:zii valle:f montagna:f neve:f vaso:m polizia:f ladro:m giudice:m sentenza:f
economia:f presidente:m giornalista:m:giornalisti persona:f favore:m telefono:m nave:f pane:m
contadino:m mela:f chitarra:f sorella:f inglese:m divano:m lampada:f tavolo:m problema:m
sistema:m donna:f uomo:m:uomini bar:m:- mezzanotte:f notte:f foglia:f gita:f signore:m
signora:f settimana:f tecnico:m:tecnici lavatrice:f articolo:m crisi:f:- notizia:f ministro:m
misura:f parlamento:m riforma:f gente:f autobus:m:- ora:f estate:f paesaggio:m bosco:m fungo:m
cena:f posta:f banca:f cliente:m conto:m cameriera:f cameriere:m finestra:f camera:f calcio:m
sport:m:- salute:f nipote:m silenzio:m frutta:f arancia:f banana:f carne:f postino:m pittore:m
ritratto:m musica:f mente:f radio:f:- viaggio:m albergo:m piscina:f anno:m ragione:f cortile:m
giornata:f tempo:m contratto:m ditta:f scarpa:f dicembre:m cima:f gruppo:m sito:m vendita:f
prova:f numero:m parte:f vita:f cosa:f volta:f paese:m lavoratore:m figlio:m figlia:f
famiglia:f momento:m stato:m caso:m modo:m punto:m fatto:m fermata:f mattina:f
pioggia:f ritardo:m sabato:m venerdì:m:- lunedì:m:-
"""

ADJECTIVES = """
vuoto chiuso nuovo grande interessante stretto antico:antichi affilato vecchio:vecchi verde
azzurro rosso fresco:freschi preferito pieno stanco:stanchi ottimo napoletano famoso nero alto
caldo dolce lungo:lunghi silenzioso anziano prossimo rotto italiano classico:classici piacevole
splendido freddo facile veloce intelligente popolare caro felice biondo aperto coperto difficile
vero direzionale enorme bianco:bianchi piccolo buono importante ultimo primo secondo solo
"""

EXTRA = """
bello	bello	ADJ:pos+m+s
bella	bello	ADJ:pos+f+s
belli	bello	ADJ:pos+m+p
belle	bello	ADJ:pos+f+p
bel	bello	ADJ:pos+m+s
bei	bello	ADJ:pos+m+p
begli	bello	ADJ:pos+m+p
bellissimo	bello	ADJ:sup+m+s
bellissima	bello	ADJ:sup+f+s
bellissimi	bello	ADJ:sup+m+p
bellissime	bello	ADJ:sup+f+p
il	il	ART-M:s
lo	il	ART-M:s
l'	il	ART-M:s
l'	il	ART-F:s
la	il	ART-F:s
i	il	ART-M:p
gli	il	ART-M:p
le	il	ART-F:p
un	uno	ART-M:s
uno	uno	ART-M:s
una	uno	ART-F:s
un'	uno	ART-F:s
di	di	PRE
d'	di	PRE
a	a	PRE
ad	a	PRE
da	da	PRE
in	in	PRE
con	con	PRE
su	su	PRE
per	per	PRE
tra	tra	PRE
fra	fra	PRE
sopra	sopra	PRE
dopo	dopo	PRE
dopo	dopo	ADV
entro	entro	PRE
verso	verso	PRE
senza	senza	PRE
contro	contro	PRE
e	e	CON
ed	e	CON
o	o	CON
ma	ma	CON
che	che	CON
che	che	WH-CHE
che	che	DET-WH:m+s
perché	perché	CON
quando	quando	CON
quando	quando	ADV
se	se	CON
mentre	mentre	CON
come	come	ADV
come	come	CON
anche	anche	ADV
però	però	CON
io	io	PRO-PERS-1-M-S
tu	tu	PRO-PERS-2-M-S
lui	lui	PRO-PERS-3-M-S
lei	lei	PRO-PERS-3-F-S
noi	noi	PRO-PERS-1-M-P
voi	voi	PRO-PERS-2-M-P
loro	loro	PRO-PERS-3-M-P
loro	loro	DET-POSS:m+p
me	me	PRO-PERS-1-M-S
te	te	PRO-PERS-2-M-S
mi	mi	PRO-PERS-CLI-1-M-S
ti	ti	PRO-PERS-CLI-2-M-S
ci	ci	PRO-PERS-CLI-1-M-P
ci	ci	CI
vi	vi	PRO-PERS-CLI-2-M-P
si	si	SI
lo	lo	PRO-PERS-CLI-3-M-S
la	lo	PRO-PERS-CLI-3-F-S
li	lo	PRO-PERS-CLI-3-M-P
le	lo	PRO-PERS-CLI-3-F-P
le	le	PRO-PERS-CLI-3-F-S
gli	gli	PRO-PERS-CLI-3-M-S
ne	ne	NE
chi	chi	WH
cosa	cosa	WH
nessuno	nessuno	PRO-INDEF-M-S
qualcuno	qualcuno	PRO-INDEF-M-S
niente	niente	PRO-INDEF-M-S
questo	questo	PRO-DEMO-M-S
questo	questo	DET-DEMO:m+s
questa	questo	PRO-DEMO-F-S
questa	questo	DET-DEMO:f+s
questi	questo	PRO-DEMO-M-P
questi	questo	DET-DEMO:m+p
queste	questo	PRO-DEMO-F-P
queste	questo	DET-DEMO:f+p
quello	quello	PRO-DEMO-M-S
quello	quello	DET-DEMO:m+s
quella	quello	DET-DEMO:f+s
quel	quello	DET-DEMO:m+s
quei	quello	DET-DEMO:m+p
tutto	tutto	DET-INDEF:m+s
tutto	tutto	PRO-INDEF-M-S
tutta	tutto	DET-INDEF:f+s
tutti	tutto	DET-INDEF:m+p
tutti	tutto	PRO-INDEF-M-P
tutte	tutto	DET-INDEF:f+p
molto	molto	DET-INDEF:m+s
molto	molto	ADV
molto	molto	PRO-INDEF-M-S
molta	molto	DET-INDEF:f+s
molti	molto	DET-INDEF:m+p
molti	molto	PRO-INDEF-M-P
molte	molto	DET-INDEF:f+p
poco	poco	ADV
poco	poco	DET-INDEF:m+s
po'	poco	ADV
ogni	ogni	DET-INDEF:m+s
qualche	qualche	DET-INDEF:m+s
alcuni	alcuno	DET-INDEF:m+p
mio	mio	DET-POSS:m+s
mia	mio	DET-POSS:f+s
miei	mio	DET-POSS:m+p
mie	mio	DET-POSS:f+p
tuo	tuo	DET-POSS:m+s
tua	tuo	DET-POSS:f+s
suo	suo	DET-POSS:m+s
sua	suo	DET-POSS:f+s
suoi	suo	DET-POSS:m+p
sue	suo	DET-POSS:f+p
nostro	nostro	DET-POSS:m+s
nostra	nostro	DET-POSS:f+s
nostri	nostro	DET-POSS:m+p
nostre	nostro	DET-POSS:f+p
non	non	ADV
sempre	sempre	ADV
ancora	ancora	ADV
domani	domani	ADV
oggi	oggi	ADV
ieri	ieri	ADV
meglio	meglio	ADV
bene	bene	ADV
presto	presto	ADV
tardi	tardi	ADV
già	già	ADV
insieme	insieme	ADV
spesso	spesso	ADV
piano	piano	ADV
dove	dove	ADV
fino	fino	ADV
stasera	stasera	ADV
velocemente	velocemente	ADV
lentamente	lentamente	ADV
rapidamente	rapidamente	ADV
ecco	ecco	ADV
qui	qui	ADV
là	là	ADV
così	così	ADV
mai	mai	ADV
più	più	ADV
due	due	DET-NUM-CARD
tre	tre	DET-NUM-CARD
quattro	quattro	DET-NUM-CARD
cinque	cinque	DET-NUM-CARD
sei	sei	DET-NUM-CARD
sette	sette	DET-NUM-CARD
otto	otto	DET-NUM-CARD
nove	nove	DET-NUM-CARD
dieci	dieci	DET-NUM-CARD
venti	venti	DET-NUM-CARD
cento	cento	DET-NUM-CARD
mille	mille	DET-NUM-CARD
grazie	grazie	INT
d'accordo	d'accordo	ADV
S.p.A.	S.p.A.	NOUN-F:s
ciao	ciao	INT
buongiorno	buongiorno	INT
dott.	dottore	NOUN-M:s
sig.	signore	NOUN-M:s
prof.	professore	NOUN-M:s
.	.	SENT
!	!	SENT
?	?	SENT
,	,	PON
;	;	PON
:	:	PON
(	(	PON
)	)	PON
«	«	PON
»	»	PON
"	"	PON
-	-	PON
...	...	PON
"""

PROPER = "Roma Milano Torino Napoli Firenze Spagna Italia Marco Maria Giulia Luca Anna Paolo Carlo Natale Rossi Bianchi"

# articulated prepositions: preposition -> contracted stem
ARTPRE = {"di": "de", "a": "a", "da": "da", "in": "ne", "su": "su"}
