// Reference values from 40-digit quadrature of the defining integrals (mpmath).

// ln Γ(x): (x, value)
pub const LOG_GAMMA: &[(f64, f64)] = &[
    (0.01, 4.59947987804202170),
    (0.05, 2.96887920105173077),
    (0.1, 2.25271265173420590),
    (0.25, 1.28802252469807746),
    (0.5, 0.572364942924700087),
    (0.75, 0.203280951431295371),
    (1.3, -0.108174809507860478),
    (2.5, 0.284682870472919160),
    (3.7, 1.42807232666538813),
    (5.0, 3.17805383034794562),
    (7.5, 7.53436423675873296),
    (10.0, 12.8018274800814696),
    (25.0, 54.7847293981123192),
    (100.0, 359.134205369575399),
    (1000.0, 5905.22042320918121),
];

// Γ(a; η): (a, η, value)
pub const UPPER_INC_GAMMA: &[(f64, f64, f64)] = &[
    (0.05, 0.0001, 6.85099851128842667),
    (0.05, 0.01, 3.59106631704172153),
    (0.05, 0.1, 1.72782160734890190),
    (0.05, 0.4, 0.695423742727687563),
    (0.05, 0.7, 0.377315195541335883),
    (0.05, 1.0, 0.224366506005373199),
    (0.05, 1.5, 0.103884468019804920),
    (0.05, 2.0, 0.0513726516376597400),
    (0.05, 5.0, 0.00125393903702937570),
    (0.05, 10.0, 4.68406559161376700e-6),
    (0.05, 30.0, 3.58729502153532584e-15),
    (0.1, 0.0001, 5.53247218374686578),
    (0.1, 0.01, 3.20965524079021309),
    (0.1, 0.1, 1.64058766280188716),
    (0.1, 0.4, 0.689026892071895865),
    (0.1, 0.7, 0.381065487528924069),
    (0.1, 1.0, 0.229535670288846039),
    (0.1, 1.5, 0.107921389617586618),
    (0.1, 2.0, 0.0539779681128282322),
    (0.1, 5.0, 0.00136936445972131944),
    (0.1, 10.0, 5.27808048393639515e-6),
    (0.1, 30.0, 4.25897533240936295e-15),
    (0.3, 0.0001, 2.78125472624173264),
    (0.3, 0.01, 2.15620028288897844),
    (0.3, 0.1, 1.35843303686861209),
    (0.3, 0.4, 0.668972918875349981),
    (0.3, 0.7, 0.398289760300275530),
    (0.3, 1.0, 0.252266579049688191),
    (0.3, 1.5, 0.125973364484151588),
    (0.3, 2.0, 0.0658922411658944766),
    (0.3, 5.0, 0.00194846497574874437),
    (0.3, 10.0, 8.51054908121530727e-6),
    (0.3, 30.0, 8.46189036706136359e-15),
    (0.5, 0.0001, 1.75245451755218317),
    (0.5, 0.01, 1.57311852232484332),
    (0.5, 0.1, 1.16046248479374423),
    (0.5, 0.4, 0.657745871856008947),
    (0.5, 0.7, 0.419581604377174248),
    (0.5, 1.0, 0.278805585280661976),
    (0.5, 1.5, 0.147582513204096419),
    (0.5, 2.0, 0.0806471179603176908),
    (0.5, 5.0, 0.00277460326041280932),
    (0.5, 10.0, 0.0000137262662354498577),
    (0.5, 30.0, 1.68130320865289786e-14),
    (0.7, 0.0001, 1.29579129274154696),
    (0.7, 0.01, 1.24141632495415584),
    (0.7, 0.1, 1.02439401686548619),
    (0.7, 0.4, 0.655536105024587125),
    (0.7, 0.7, 0.445766401619659800),
    (0.7, 1.0, 0.309991678736821144),
    (0.7, 1.5, 0.173572398066528774),
    (0.7, 2.0, 0.0989804220870762331),
    (0.7, 5.0, 0.00395419071303918370),
    (0.7, 10.0, 0.0000221443812043420999),
    (0.7, 30.0, 3.34072904831932945e-14),
    (0.9, 0.0001, 1.06834961684695121),
    (0.9, 0.01, 1.05110192060833481),
    (0.9, 0.1, 0.935162242648105857),
    (0.9, 0.4, 0.662843606919357835),
    (0.9, 0.7, 0.477891395703805171),
    (0.9, 1.0, 0.346884953751977787),
    (0.9, 1.5, 0.204986664271774429),
    (0.9, 2.0, 0.121839564865979188),
    (0.9, 5.0, 0.00563997420875052184),
    (0.9, 10.0, 0.0000357350263880157935),
    (0.9, 30.0, 6.63824409983907072e-14),
    (0.999, 0.0001, 1.00047718436305662),
    (0.999, 0.01, 0.990572080355993440),
    (0.999, 0.1, 0.905098372745382624),
    (0.999, 0.4, 0.670232010578835927),
    (0.999, 0.7, 0.496388754979031895),
    (0.999, 1.0, 0.367660155044651594),
    (0.999, 1.5, 0.222939763011444227),
    (0.999, 2.0, 0.135192656094428215),
    (0.999, 5.0, 0.00672596513702629544),
    (0.999, 10.0, 0.0000452913657653380934),
    (0.999, 30.0, 9.32554879013054792e-14),
    (1.0, 0.0001, 0.999900004999833337),
    (1.0, 0.01, 0.990049833749168053),
    (1.0, 0.1, 0.904837418035959568),
    (1.0, 0.4, 0.670320046035639286),
    (1.0, 0.7, 0.496585303791409537),
    (1.0, 1.0, 0.367879441171442322),
    (1.0, 1.5, 0.223130160148429829),
    (1.0, 2.0, 0.135335283236612692),
    (1.0, 5.0, 0.00673794699908546710),
    (1.0, 10.0, 0.0000453999297624848515),
    (1.0, 30.0, 9.35762296884017460e-14),
];

// I_x(a, b): (a, b, x, value)
pub const REG_INC_BETA: &[(f64, f64, f64, f64)] = &[
    (0.1, 0.1, 0.001, 0.254241656588608187),
    (0.1, 0.1, 0.1, 0.406385093936275990),
    (0.1, 0.1, 0.4, 0.482120045609327997),
    (0.1, 0.1, 0.5, 0.500000000000000000),
    (0.1, 0.1, 0.9, 0.593614906063724023),
    (0.1, 0.1, 0.999, 0.745758343411391791),
    (0.1, 0.3, 0.001, 0.390643616625071282),
    (0.1, 0.3, 0.1, 0.623215563953230593),
    (0.1, 0.3, 0.4, 0.733576581995278081),
    (0.1, 0.3, 0.5, 0.757950931769555953),
    (0.1, 0.3, 0.9, 0.866933680028199283),
    (0.1, 0.3, 0.999, 0.967286872397370525),
    (0.1, 0.7, 0.001, 0.472516140367163555),
    (0.1, 0.7, 0.1, 0.750982939872210068),
    (0.1, 0.7, 0.4, 0.871242749531804215),
    (0.1, 0.7, 0.5, 0.894458269131409620),
    (0.1, 0.7, 0.9, 0.972067600889836215),
    (0.1, 0.7, 0.999, 0.998929793041325442),
    (0.1, 2.0, 0.001, 0.551255838266636769),
    (0.1, 2.0, 0.1, 0.865817775849466835),
    (0.1, 2.0, 0.4, 0.967190148748809715),
    (0.1, 2.0, 0.5, 0.979684641113647786),
    (0.1, 2.0, 0.9, 0.999414450788276537),
    (0.1, 2.0, 0.999, 0.999999944966976469),
    (0.1, 5.0, 0.001, 0.612898359374994484),
    (0.1, 5.0, 0.1, 0.939049186452745235),
    (0.1, 5.0, 0.4, 0.996372775631851466),
    (0.1, 5.0, 0.5, 0.998744026761860993),
    (0.1, 5.0, 0.9, 0.999999735349817567),
    (0.1, 5.0, 0.999, 0.999999999999999976),
    (0.3, 0.1, 0.001, 0.0327131276026294665),
    (0.3, 0.1, 0.1, 0.133066319971800729),
    (0.3, 0.1, 0.4, 0.218641952997141874),
    (0.3, 0.1, 0.5, 0.242049068230444047),
    (0.3, 0.1, 0.9, 0.376784436046769425),
    (0.3, 0.1, 0.999, 0.609356383374928684),
    (0.3, 0.3, 0.001, 0.0698395851219950874),
    (0.3, 0.3, 0.1, 0.282712418793317006),
    (0.3, 0.3, 0.4, 0.455668398738970107),
    (0.3, 0.3, 0.5, 0.500000000000000000),
    (0.3, 0.3, 0.9, 0.717287581206683019),
    (0.3, 0.3, 0.999, 0.930160414878004894),
    (0.3, 0.7, 0.001, 0.108072847332740379),
    (0.3, 0.7, 0.1, 0.433310047334234509),
    (0.3, 0.7, 0.4, 0.673565243959712646),
    (0.3, 0.7, 0.5, 0.727571559270052396),
    (0.3, 0.7, 0.9, 0.924360722109089892),
    (0.3, 0.7, 0.999, 0.997076958644422441),
    (0.3, 2.0, 0.001, 0.163622535770887925),
    (0.3, 2.0, 0.1, 0.636507786706635823),
    (0.3, 2.0, 0.4, 0.896396195660201186),
    (0.3, 2.0, 0.5, 0.934090255809670854),
    (0.3, 2.0, 0.9, 0.997952746033181268),
    (0.3, 2.0, 0.999, 0.999999804908941946),
    (0.3, 5.0, 0.001, 0.222352291618507033),
    (0.3, 5.0, 0.1, 0.810849391387033734),
    (0.3, 5.0, 0.4, 0.986397822550865286),
    (0.3, 5.0, 0.5, 0.995127850534918684),
    (0.3, 5.0, 0.9, 0.999998872528305588),
    (0.3, 5.0, 0.999, 0.999999999999999894),
    (0.5, 0.1, 0.001, 0.00558721643932138885),
    (0.5, 0.1, 0.1, 0.0576337116842095622),
    (0.5, 0.1, 0.4, 0.129396563019994811),
    (0.5, 0.1, 0.5, 0.151998287600229554),
    (0.5, 0.1, 0.9, 0.295166377948779007),
    (0.5, 0.1, 0.999, 0.557355670836890393),
    (0.5, 0.3, 0.001, 0.0138898031676761311),
    (0.5, 0.3, 0.1, 0.142282512319543091),
    (0.5, 0.3, 0.4, 0.310870523672643238),
    (0.5, 0.3, 0.5, 0.360710545845547282),
    (0.5, 0.3, 0.9, 0.628765018072705570),
    (0.5, 0.3, 0.999, 0.907850370161237937),
    (0.5, 0.7, 0.001, 0.0252422347711961215),
    (0.5, 0.7, 0.1, 0.255025266684626079),
    (0.5, 0.7, 0.4, 0.529074597952903118),
    (0.5, 0.7, 0.5, 0.600364232133001498),
    (0.5, 0.7, 0.9, 0.883788956770792725),
    (0.5, 0.7, 0.999, 0.995470546887012820),
    (0.5, 2.0, 0.001, 0.0474183535142248486),
    (0.5, 2.0, 0.1, 0.458530260724415015),
    (0.5, 2.0, 0.4, 0.822192191643778642),
    (0.5, 2.0, 0.5, 0.883883476483184406),
    (0.5, 2.0, 0.9, 0.996117462953039491),
    (0.5, 2.0, 0.999, 0.999999624874929641),
    (0.5, 5.0, 0.001, 0.0777180078990332051),
    (0.5, 5.0, 0.1, 0.683357084979987758),
    (0.5, 5.0, 0.4, 0.972677079797041383),
    (0.5, 5.0, 0.5, 0.989880440264566285),
    (0.5, 5.0, 0.9, 0.999997429410300771),
    (0.5, 5.0, 0.999, 0.999999999999999754),
    (0.7, 0.1, 0.001, 0.00107020695867455758),
    (0.7, 0.1, 0.1, 0.0279323991101637909),
    (0.7, 0.1, 0.4, 0.0849783366597415816),
    (0.7, 0.1, 0.5, 0.105541730868590380),
    (0.7, 0.1, 0.9, 0.249017060127789953),
    (0.7, 0.1, 0.999, 0.527483859632836404),
    (0.7, 0.3, 0.001, 0.00292304135557755758),
    (0.7, 0.3, 0.1, 0.0756392778909101236),
    (0.7, 0.3, 0.4, 0.222615051857737730),
    (0.7, 0.3, 0.5, 0.272428440729947604),
    (0.7, 0.3, 0.9, 0.566689952665765528),
    (0.7, 0.3, 0.999, 0.891927152667259592),
    (0.7, 0.7, 0.001, 0.00597615684174426606),
    (0.7, 0.7, 0.1, 0.152030271519480470),
    (0.7, 0.7, 0.4, 0.419860677188681332),
    (0.7, 0.7, 0.5, 0.500000000000000000),
    (0.7, 0.7, 0.9, 0.847969728480519560),
    (0.7, 0.7, 0.999, 0.994023843158255730),
    (0.7, 2.0, 0.001, 0.0134980196926697195),
    (0.7, 2.0, 0.1, 0.325227757339927412),
    (0.7, 2.0, 0.4, 0.747705092061846888),
    (0.7, 2.0, 0.5, 0.831022479007818504),
    (0.7, 2.0, 0.9, 0.993924816523347007),
    (0.7, 2.0, 0.999, 0.999999404880941952),
    (0.7, 5.0, 0.001, 0.0263745952691240285),
    (0.7, 5.0, 0.1, 0.564124591380284221),
    (0.7, 5.0, 0.4, 0.955200489945604386),
    (0.7, 5.0, 0.5, 0.982850959204647980),
    (0.7, 5.0, 0.9, 0.999995220468153200),
    (0.7, 5.0, 0.999, 0.999999999999999534),
    (0.9, 0.1, 0.001, 0.000218160039900841218),
    (0.9, 0.1, 0.1, 0.0143850257569907150),
    (0.9, 0.1, 0.4, 0.0589722810327628675),
    (0.9, 0.1, 0.5, 0.0772607750786309574),
    (0.9, 0.1, 0.9, 0.217941822051424630),
    (0.9, 0.1, 0.999, 0.507011894933697149),
    (0.9, 0.3, 0.001, 0.000636939520431325348),
    (0.9, 0.3, 0.1, 0.0415864975219910659),
    (0.9, 0.3, 0.4, 0.164168835422050875),
    (0.9, 0.3, 0.5, 0.211520111711460778),
    (0.9, 0.3, 0.9, 0.519039786642767100),
    (0.9, 0.3, 0.999, 0.879472702940385441),
    (0.9, 0.7, 0.001, 0.00142824004324800111),
    (0.9, 0.7, 0.1, 0.0914413129393589384),
    (0.9, 0.7, 0.4, 0.335579438386601078),
    (0.9, 0.7, 0.5, 0.419109065741379605),
    (0.9, 0.7, 0.9, 0.815611614458992394),
    (0.9, 0.7, 0.999, 0.992690261753274940),
    (0.9, 2.0, 0.001, 0.00378920266235739878),
    (0.9, 2.0, 0.1, 0.227865499534744267),
    (0.9, 2.0, 0.4, 0.675110267453293879),
    (0.9, 2.0, 0.5, 0.777035760338812538),
    (0.9, 2.0, 0.9, 0.991390507930428790),
    (0.9, 2.0, 0.999, 0.999999144942976474),
    (0.9, 5.0, 0.001, 0.00873731915273124531),
    (0.9, 5.0, 0.1, 0.457465607402375336),
    (0.9, 5.0, 0.4, 0.934089816908003162),
    (0.9, 5.0, 0.5, 0.973935198559537711),
    (0.9, 5.0, 0.9, 0.999992033675798607),
    (0.9, 5.0, 0.999, 0.999999999999999210),
    (2.0, 0.1, 0.001, 5.50330235306977917e-8),
    (2.0, 0.1, 0.1, 0.000585549211723463530),
    (2.0, 0.1, 0.4, 0.0117917748340965555),
    (2.0, 0.1, 0.5, 0.0203153588863522144),
    (2.0, 0.1, 0.9, 0.134182224150533187),
    (2.0, 0.1, 0.999, 0.448744161733363183),
    (2.0, 0.3, 0.001, 1.95091058054301222e-7),
    (2.0, 0.3, 0.1, 0.00204725396681873327),
    (2.0, 0.3, 0.4, 0.0391327355026137135),
    (2.0, 0.3, 0.5, 0.0659097441903291463),
    (2.0, 0.3, 0.9, 0.363492213293364226),
    (2.0, 0.3, 0.999, 0.836377464229112033),
    (2.0, 0.7, 0.001, 5.95119058048105451e-7),
    (2.0, 0.7, 0.1, 0.00607518347665299650),
    (2.0, 0.7, 0.4, 0.104808716269530310),
    (2.0, 0.7, 0.5, 0.168977520992181496),
    (2.0, 0.7, 0.9, 0.674772242660072647),
    (2.0, 0.7, 0.999, 0.986501980307330272),
    (2.0, 2.0, 0.001, 2.99800000000000012e-6),
    (2.0, 2.0, 0.1, 0.0280000000000000030),
    (2.0, 2.0, 0.4, 0.352000000000000032),
    (2.0, 2.0, 0.5, 0.500000000000000000),
    (2.0, 2.0, 0.9, 0.972000000000000012),
    (2.0, 2.0, 0.999, 0.999997002000000000),
    (2.0, 5.0, 0.001, 0.0000149600449760050006),
    (2.0, 5.0, 0.1, 0.114265000000000011),
    (2.0, 5.0, 0.4, 0.766720000000000035),
    (2.0, 5.0, 0.5, 0.890625000000000000),
    (2.0, 5.0, 0.9, 0.999945000000000000),
    (2.0, 5.0, 0.999, 0.999999999999994005),
    (5.0, 0.1, 0.001, 2.44851150173433228e-17),
    (5.0, 0.1, 0.1, 2.64650182433465133e-7),
    (5.0, 0.1, 0.4, 0.000362918662000918708),
    (5.0, 0.1, 0.5, 0.00125597323813900744),
    (5.0, 0.1, 0.9, 0.0609508135472547826),
    (5.0, 0.1, 0.999, 0.387101640625005463),
    (5.0, 0.3, 0.001, 1.06132169427885856e-16),
    (5.0, 0.3, 0.1, 1.12747169441194204e-6),
    (5.0, 0.3, 0.4, 0.00144834498953864660),
    (5.0, 0.3, 0.5, 0.00487214946508131578),
    (5.0, 0.3, 0.9, 0.189150608612966314),
    (5.0, 0.3, 0.999, 0.777647708381492909),
    (5.0, 0.7, 0.001, 4.65733719209869280e-16),
    (5.0, 0.7, 0.1, 4.77953184679977251e-6),
    (5.0, 0.7, 0.4, 0.00539168167009646629),
    (5.0, 0.7, 0.5, 0.0171490407953520197),
    (5.0, 0.7, 0.9, 0.435875408619715863),
    (5.0, 0.7, 0.999, 0.973625404730875956),
    (5.0, 2.0, 0.001, 5.99500000000000062e-15),
    (5.0, 2.0, 0.1, 0.0000550000000000000150),
    (5.0, 2.0, 0.4, 0.0409600000000000102),
    (5.0, 2.0, 0.5, 0.109375000000000000),
    (5.0, 2.0, 0.9, 0.885735000000000044),
    (5.0, 2.0, 0.999, 0.999985039955023995),
    (5.0, 5.0, 0.001, 1.25580539685070013e-13),
    (5.0, 5.0, 0.1, 0.000890920000000000229),
    (5.0, 5.0, 0.4, 0.266567680000000046),
    (5.0, 5.0, 0.5, 0.500000000000000000),
    (5.0, 5.0, 0.9, 0.999109080000000001),
    (5.0, 5.0, 0.999, 0.999999999999874419),
];
